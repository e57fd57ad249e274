#include "weid/harness.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "weid/decompose.hpp"
#include "weid/io.hpp"

namespace weid {
namespace {

using nlohmann::json;

std::string field_str(const FieldConfig& f) {
  return f.rationals ? "q" : "fp:" + std::to_string(f.p);
}

json spec_to_json(const SweepSpec& s) {
  return json{{"family", s.family},
              {"max_weight", s.max_weight},
              {"max_power", s.max_power},
              {"max_pairs", s.max_pairs},
              {"tree_count", s.tree_count},
              {"seed", s.seed},
              {"metamorphic_stride", s.metamorphic_stride},
              {"field", field_str(s.field)},
              {"budgets",
               json{{"faces", s.budgets.faces}, {"monomials", s.budgets.monomials}}}};
}

json criterion_to_json(const CriterionReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back(json{{"condition", x.condition}, {"detail", x.detail}});
  json j{{"theorem", r.theorem}, {"holds", r.holds}, {"violations", v}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json labeling_to_json(const WeightedGraph& g, const PairLabeling& L) {
  json a = json::array();
  for (const auto& [x, y] : L.pairs)
    a.push_back(json::array({g.label(x), g.label(y)}));
  return a;
}

json verdict_to_json(const OracleVerdict& v) {
  json j{{"n", v.n}};
  if (!v.ok) {
    j["budget_exhausted"] = true;
    j["error"] = v.error;
    return j;
  }
  j["cm"] = v.cm;
  j["unmixed"] = v.unmixed;
  j["depth"] = v.depth;
  j["dim"] = v.dim;
  if (v.reisner_checked) j["reisner_checked"] = true;
  return j;
}

/// Cheap pre-test for whether the polarization oracle has any chance inside
/// its enumeration limits (the attempt is still guarded by the face budget).
bool reisner_feasible(const MonomialIdeal& J) {
  // The polarization oracle recurses over links of a complex on `pol`
  // vertices; only the direct-homology regime (<= 16 vertices) is cheap
  // enough for routine cross-checking.  A few-generators bound is NOT a
  // substitute: it caps only the top-level nerve, not the link recursion.
  std::size_t pol = 0;
  const auto maxe = J.max_exponents();
  for (std::size_t v = 0; v < J.nvars(); ++v)
    pol += std::max<std::size_t>(1, static_cast<std::size_t>(maxe[v]));
  return pol <= 16;
}

OracleVerdict run_power_oracles(const MonomialIdeal& J, unsigned n,
                                const FieldConfig& field, const Budgets& budgets,
                                bool cross_check, const std::string& what) {
  OracleVerdict v;
  v.n = n;
  Decomposition dec = primary_decomposition(J);
  std::int64_t dim = static_cast<std::int64_t>(J.nvars() - dec.height);
  try {
    CmVerdict d = is_cm_depth(J, field, budgets, dim);
    v.cm = d.is_cm;
    v.depth = d.depth;
    v.dim = d.dim;
    v.unmixed = dec.unmixed;
    v.ok = true;
  } catch (const ResourceLimitError& e) {
    v.error = e.what();
    return v;
  }
  if (v.cm && !v.unmixed)
    throw OracleDisagreement("depth oracle calls " + what +
                             " CM but the decomposition is mixed");
  if (cross_check && reisner_feasible(J)) {
    // The cross-check is opportunistic: cap its cell budget so that dense
    // polarizations bail out in milliseconds instead of consuming the whole
    // sweep budget on a single confirmation.
    Budgets cross = budgets;
    cross.faces = std::min<std::uint64_t>(cross.faces, std::uint64_t{1} << 20);
    try {
      CmVerdict r = is_cm_reisner(J, field, cross, dim);
      if (r.is_cm != v.cm)
        throw OracleDisagreement("oracles disagree on " + what + ": depth says " +
                                 (v.cm ? "CM" : "not CM") +
                                 ", polarization says the opposite");
      v.reisner_checked = true;
    } catch (const ResourceLimitError&) {
      // cross-check infeasible at this size; the primary verdict stands
    }
  }
  return v;
}

/// Odometer over [lo, hi]^k, last coordinate fastest.
bool next_tuple(std::vector<Exp>& t, Exp lo, Exp hi) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < hi) {
      ++t[i];
      std::fill(t.begin() + i + 1, t.end(), lo);
      return true;
    }
  }
  return false;
}

std::string tuple_str(const std::vector<Exp>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::vector<std::string> xy_labels(std::size_t t) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= t; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= t; ++i) labels.push_back("y" + std::to_string(i));
  return labels;
}

PairLabeling xy_pairs(std::size_t t) {
  PairLabeling L;
  for (std::size_t i = 0; i < t; ++i) L.pairs.emplace_back(i, t + i);
  return L;
}

std::vector<Instance> gen_path3(const SweepSpec& spec) {
  std::vector<Instance> out;
  for (Exp k = 1; k <= spec.max_weight; ++k)
    for (Exp p = 1; p <= spec.max_weight; ++p)
      for (Exp q = 1; q <= spec.max_weight; ++q) {
        WeightedGraph g({"a", "b", "x", "y"},
                        {{0, 1, k}, {0, 2, p}, {1, 3, q}});
        PairLabeling L;
        L.pairs = {{0, 2}, {1, 3}};
        out.push_back({"path3[k=" + std::to_string(k) + ",p=" + std::to_string(p) +
                           ",q=" + std::to_string(q) + "]",
                       std::move(g), std::move(L)});
      }
  return out;
}

std::vector<Instance> gen_star(const SweepSpec& spec) {
  std::vector<Instance> out;
  for (std::size_t t = 2; t <= spec.max_pairs; ++t) {
    // Center is x_t (core index t-1); spokes x_i x_t for i < t.
    std::vector<Exp> d(t - 1, 1);
    do {
      std::vector<Exp> m(t, 1);
      do {
        std::vector<WeightedGraph::Edge> edges;
        for (std::size_t i = 0; i + 1 < t; ++i) edges.push_back({i, t - 1, d[i]});
        for (std::size_t i = 0; i < t; ++i) edges.push_back({i, t + i, m[i]});
        out.push_back({"star[t=" + std::to_string(t) + ",d=" + tuple_str(d) +
                           ",m=" + tuple_str(m) + "]",
                       WeightedGraph(xy_labels(t), edges), xy_pairs(t)});
      } while (next_tuple(m, 1, spec.max_weight));
    } while (next_tuple(d, 1, spec.max_weight));
  }
  return out;
}

std::vector<Instance> gen_complete(const SweepSpec& spec) {
  std::vector<Instance> out;
  for (std::size_t t = 2; t <= spec.max_pairs; ++t) {
    std::vector<Exp> m(t, 1);
    do {
      std::vector<WeightedGraph::Edge> edges;
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) edges.push_back({i, j, 1});
      for (std::size_t i = 0; i < t; ++i) edges.push_back({i, t + i, m[i]});
      out.push_back({"complete[t=" + std::to_string(t) + ",m=" + tuple_str(m) + "]",
                     WeightedGraph(xy_labels(t), edges), xy_pairs(t)});
    } while (next_tuple(m, 1, spec.max_weight));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> prufer_decode(
    const std::vector<std::size_t>& seq, std::size_t t) {
  std::vector<std::size_t> deg(t, 1);
  for (std::size_t v : seq) ++deg[v];
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < t; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v : seq) {
    std::size_t u = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(u, v), std::max(u, v));
    if (--deg[v] == 1) leaves.insert(v);
  }
  std::size_t u = *leaves.begin(), w = *std::next(leaves.begin());
  edges.emplace_back(std::min(u, w), std::max(u, w));
  return edges;
}

std::vector<Instance> gen_tree(const SweepSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < spec.tree_count; ++i) {
    std::size_t t =
        std::uniform_int_distribution<std::size_t>(2, spec.max_pairs)(rng);
    std::vector<std::pair<std::size_t, std::size_t>> core;
    if (t == 2) {
      core = {{0, 1}};
    } else {
      std::vector<std::size_t> seq(t - 2);
      for (auto& v : seq)
        v = std::uniform_int_distribution<std::size_t>(0, t - 1)(rng);
      core = prufer_decode(seq, t);
    }
    std::sort(core.begin(), core.end());
    std::uniform_int_distribution<Exp> wdist(1, spec.max_weight);
    std::vector<WeightedGraph::Edge> edges;
    for (const auto& [u, v] : core) edges.push_back({u, v, wdist(rng)});
    for (std::size_t j = 0; j < t; ++j) edges.push_back({j, t + j, wdist(rng)});
    out.push_back({"tree[i=" + std::to_string(i) + ",t=" + std::to_string(t) + "]",
                   WeightedGraph(xy_labels(t), edges), xy_pairs(t)});
  }
  return out;
}

std::vector<Instance> gen_vwc(const SweepSpec& spec) {
  if (2 * spec.max_pairs > 6)
    throw ResourceLimitError(
        "vwc-enum enumerates graphs on at most six vertices; lower the pair cap");
  std::vector<Instance> out;
  std::unordered_map<std::string, std::size_t> seen;
  std::uint64_t enumerated = 0;
  for (std::size_t nv = 2; nv <= 2 * spec.max_pairs; nv += 2) {
    std::vector<std::string> vlabels;
    for (std::size_t v = 0; v < nv; ++v)
      vlabels.push_back("v" + std::to_string(v + 1));
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < nv; ++u)
      for (std::size_t v = u + 1; v < nv; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<WeightedGraph::Edge> edges;
      std::uint64_t touched = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1) {
          edges.push_back({slots[s].first, slots[s].second, 1});
          touched |= (std::uint64_t{1} << slots[s].first) |
                     (std::uint64_t{1} << slots[s].second);
        }
      }
      if (touched + 1 != (std::uint64_t{1} << nv)) continue;  // isolated vertex
      WeightedGraph g(vlabels, edges);
      if (!is_very_well_covered(g)) continue;
      auto L = find_vwc_labeling(g);
      if (!L) continue;
      const std::size_t t = L->t();
      // Canonical renaming: x_i -> i, y_i -> t + i.
      std::vector<std::size_t> to_canon(nv);
      for (std::size_t i = 0; i < t; ++i) {
        to_canon[L->x(i)] = i;
        to_canon[L->y(i)] = t + i;
      }
      struct Slot {
        std::size_t cu, cv, orig;
      };
      std::vector<Slot> canon;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        std::size_t cu = to_canon[edges[e].u], cv = to_canon[edges[e].v];
        if (cu > cv) std::swap(cu, cv);
        canon.push_back({cu, cv, e});
      }
      std::sort(canon.begin(), canon.end(),
                [](const Slot& a, const Slot& b) {
                  return std::tie(a.cu, a.cv) < std::tie(b.cu, b.cv);
                });
      std::vector<Exp> w(edges.size(), 1);
      do {
        if (++enumerated > 20'000'000)
          throw ResourceLimitError(
              "vwc-enum would enumerate more than 2e7 weighted instances; "
              "lower --max-weight");
        std::string key = "vwc[t=" + std::to_string(t);
        for (const Slot& s : canon) {
          const char* nu = s.cu < t ? "x" : "y";
          const char* nVChar = s.cv < t ? "x" : "y";
          key += "," + (nu + std::to_string(s.cu % t + 1)) +
                 (nVChar + std::to_string(s.cv % t + 1)) + ":" +
                 std::to_string(w[s.orig]);
        }
        key += "]";
        auto it = seen.find(key);
        if (it != seen.end()) {
          ++out[it->second].multiplicity;
        } else {
          std::vector<WeightedGraph::Edge> cedges;
          for (const Slot& s : canon) cedges.push_back({s.cu, s.cv, w[s.orig]});
          seen.emplace(key, out.size());
          out.push_back({key, WeightedGraph(xy_labels(t), cedges), xy_pairs(t)});
        }
      } while (next_tuple(w, 1, spec.max_weight));
    }
  }
  return out;
}

/// Equal-weight adjacent core edges x_i - x_j - x_k with x_i x_k absent give
/// a double-spoke reduction: the ideal cannot be CM from power
/// ceil(max{m_i, m_k} / w) + 2 on.  Returns the least such threshold.
std::optional<std::pair<Exp, std::string>> dif_threshold_in(const WeightedGraph& g,
                                                            const PairLabeling& M) {
  std::optional<std::pair<Exp, std::string>> best;
  for (std::size_t j = 0; j < M.t(); ++j) {
    std::vector<std::size_t> nb;
    for (std::size_t i = 0; i < M.t(); ++i)
      if (i != j && g.has_edge(M.x(j), M.x(i))) nb.push_back(i);
    for (std::size_t A = 0; A < nb.size(); ++A) {
      for (std::size_t B = A + 1; B < nb.size(); ++B) {
        std::size_t i = nb[A], k = nb[B];
        if (g.has_edge(M.x(i), M.x(k))) continue;
        Exp wij = *g.weight(M.x(j), M.x(i));
        Exp wjk = *g.weight(M.x(j), M.x(k));
        if (wij != wjk) continue;
        Exp mi = *g.weight(M.x(i), M.y(i));
        Exp mk = *g.weight(M.x(k), M.y(k));
        Exp n0 = ceil_div(std::max(mi, mk), wij) + 2;
        if (!best || n0 < best->first)
          best = {n0, "equal-weight spokes " + g.label(M.x(i)) + "-" +
                          g.label(M.x(j)) + "-" + g.label(M.x(k)) +
                          " force non-CM from power " + std::to_string(n0)};
      }
    }
  }
  return best;
}

struct InstanceRun {
  std::map<std::string, CriterionReport> criteria;
  std::optional<Exp> pn;  // pendant bound, when the family carries a matching
  std::optional<std::pair<Exp, std::string>> dif;
  std::map<unsigned, MonomialIdeal> powers;
  std::map<unsigned, OracleVerdict> verdicts;
  std::vector<std::string> discrepancies;
  std::vector<std::string> meta_failures;
  std::size_t meta_checks = 0, meta_skipped = 0;
};

const OracleVerdict* verdict_ok(const InstanceRun& run, unsigned n) {
  auto it = run.verdicts.find(n);
  return it != run.verdicts.end() && it->second.ok ? &it->second : nullptr;
}

void apply_agreement_rules(const Instance& inst, InstanceRun& run) {
  auto& disc = run.discrepancies;
  auto fail = [&](const std::string& rule, unsigned n, const std::string& what) {
    disc.push_back(rule + " at n=" + std::to_string(n) + ": " + what +
                   " [" + inst.id + "]");
  };
  if (auto it = run.criteria.find("square"); it != run.criteria.end()) {
    if (const auto* v = verdict_ok(run, 2); v && it->second.holds != v->cm)
      fail("square", 2,
           it->second.holds ? "criterion holds but I^2 is not CM"
                            : "criterion fails but I^2 is CM");
  }
  if (auto it = run.criteria.find("tk"); it != run.criteria.end() && it->second.holds)
    for (const auto& [n, v] : run.verdicts)
      if (v.ok && !v.cm) fail("tk", n, "coefficient criterion holds but I^n is not CM");
  if (run.pn)
    for (const auto& [n, v] : run.verdicts)
      if (v.ok && n <= *run.pn && !v.cm)
        fail("pn", n, "pendant bound covers this power but I^n is not CM");
  if (auto it = run.criteria.find("path3"); it != run.criteria.end()) {
    for (const auto& [n, v] : run.verdicts) {
      if (!v.ok) continue;
      if (it->second.holds && !v.cm)
        fail("path3", n, "criterion holds but I^n is not CM");
      if (!it->second.holds && n >= 2 && v.cm)
        fail("path3", n, "criterion fails but I^n is CM");
    }
  }
  if (auto it = run.criteria.find("star"); it != run.criteria.end() && it->second.holds)
    for (const auto& [n, v] : run.verdicts) {
      if (!v.ok) continue;
      if (!v.cm) fail("star", n, "criterion holds but I^n is not CM");
      else if (!v.unmixed) fail("star", n, "criterion holds but I^n is mixed");
    }
  if (auto it = run.criteria.find("complete"); it != run.criteria.end()) {
    for (const auto& [n, v] : run.verdicts) {
      if (!v.ok) continue;
      if (it->second.holds && !v.cm)
        fail("complete", n, "criterion holds but I^n is not CM");
      if (!it->second.holds && n >= 2 && v.cm)
        fail("complete", n, "criterion fails but I^n is CM");
    }
  }
  if (auto it = run.criteria.find("tree-necessary"); it != run.criteria.end()) {
    bool edge_bound_violated = false;
    for (const auto& viol : it->second.violations)
      edge_bound_violated |= viol.condition == "1";
    if (edge_bound_violated)
      if (const auto* v = verdict_ok(run, 2); v && v->cm)
        fail("tree-necessary", 2, "core-edge bound violated but I^2 is CM");
  }
  if (run.dif)
    for (const auto& [n, v] : run.verdicts)
      if (v.ok && n >= run.dif->first && v.cm) fail("dif", n, run.dif->second);
}

/// Pendant-weight domination: whenever some tested power is unmixed, every
/// pendant edge must outweigh every other edge at its support vertex.
void check_pendant_domination(const Instance& inst, InstanceRun& run) {
  const WeightedGraph& g = inst.graph;
  for (const auto& [n, v] : run.verdicts) {
    if (!v.ok || !v.unmixed) continue;
    for (const auto& e : g.edges()) {
      for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (g.degree(y) != 1) continue;
        ++run.meta_checks;
        for (const auto& f : g.edges()) {
          std::size_t z;
          if (f.u == x) z = f.v;
          else if (f.v == x) z = f.u;
          else continue;
          if (z == y) continue;
          if (e.w < f.w)
            run.meta_failures.push_back(
                "pendant-domination: I^" + std::to_string(n) +
                " unmixed but w{" + g.label(x) + "," + g.label(y) + "}=" +
                std::to_string(e.w) + " < w{" + g.label(x) + "," + g.label(z) +
                "}=" + std::to_string(f.w) + " [" + inst.id + "]");
        }
      }
    }
  }
}

void run_metamorphic(const Instance& inst, const MonomialIdeal& I, InstanceRun& run,
                     const SweepSpec& spec) {
  const WeightedGraph& g = inst.graph;
  auto& mf = run.meta_failures;

  // Restriction and localization commute with squaring.
  if (run.powers.count(2)) {
    const MonomialIdeal& J2 = run.powers.at(2);
    VarMask full = VarMask::first_n(I.nvars());
    for (std::size_t v = 0; v < I.nvars(); ++v) {
      VarMask keep = full.minus(VarMask::single(v));
      ++run.meta_checks;
      if (restrict_to(J2, keep) != power(restrict_to(I, keep), 2))
        mf.push_back("restrict-square identity failed at variable " +
                     std::to_string(v) + " [" + inst.id + "]");
      ++run.meta_checks;
      if (localize(J2, VarMask::single(v)) !=
          power(localize(I, VarMask::single(v)), 2))
        mf.push_back("localize-square identity failed at variable " +
                     std::to_string(v) + " [" + inst.id + "]");
    }
  }

  // Pendant deletion preserves unmixedness and CM-ness at every power.
  for (const auto& e : g.edges()) {
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (g.degree(y) != 1) continue;
      WeightedGraph h = g.remove_vertices({x});
      if (h.num_edges() == 0) continue;
      MonomialIdeal IH = edge_ideal(h);
      for (const auto& [n, v] : run.verdicts) {
        if (!v.ok || (!v.unmixed && !v.cm)) continue;
        MonomialIdeal JH = power(IH, n);
        Decomposition dec = primary_decomposition(JH);
        ++run.meta_checks;
        if (v.unmixed && !dec.unmixed)
          mf.push_back("pendant-deletion-unmixed: deleting " + g.label(x) +
                       " breaks unmixedness of I^" + std::to_string(n) + " [" +
                       inst.id + "]");
        if (v.cm) {
          ++run.meta_checks;
          try {
            CmVerdict d = is_cm_depth(
                JH, spec.field, spec.budgets,
                static_cast<std::int64_t>(JH.nvars() - dec.height));
            if (!d.is_cm)
              mf.push_back("pendant-deletion-cm: deleting " + g.label(x) +
                           " breaks CM-ness of I^" + std::to_string(n) + " [" +
                           inst.id + "]");
          } catch (const ResourceLimitError&) {
            ++run.meta_skipped;
          }
        }
      }
    }
  }

  // Deleting a matched pair preserves unmixedness of the square.
  if (const auto* v2 = verdict_ok(run, 2); v2 && v2->unmixed) {
    for (std::size_t k = 0; k < inst.labeling.t(); ++k) {
      WeightedGraph h =
          g.remove_vertices({inst.labeling.x(k), inst.labeling.y(k)});
      if (h.num_edges() == 0) continue;
      ++run.meta_checks;
      if (!primary_decomposition(power(edge_ideal(h), 2)).unmixed)
        mf.push_back("pair-deletion-unmixed: deleting pair " +
                     g.label(inst.labeling.x(k)) + "," +
                     g.label(inst.labeling.y(k)) +
                     " breaks unmixedness of I^2 [" + inst.id + "]");
    }
  }

  // Localization preserves CM-ness.
  for (const auto& [n, v] : run.verdicts) {
    if (!v.ok || !v.cm) continue;
    for (std::size_t var = 0; var < I.nvars(); ++var) {
      MonomialIdeal loc = localize(run.powers.at(n), VarMask::single(var));
      if (loc.is_unit() || loc.is_zero()) continue;
      ++run.meta_checks;
      try {
        if (!is_cm_depth(loc, spec.field, spec.budgets).is_cm)
          mf.push_back("localization-cm: I^" + std::to_string(n) +
                       " is CM but its localization at variable " +
                       std::to_string(var) + " is not [" + inst.id + "]");
      } catch (const ResourceLimitError&) {
        ++run.meta_skipped;
      }
    }
  }
}

std::set<unsigned> powers_to_run(const std::string& family, const InstanceRun& run,
                                 const SweepSpec& spec, bool meta_instance) {
  std::set<unsigned> want;
  if (family == "vwc-enum") {
    want.insert(2);
    return want;
  }
  const unsigned N = spec.max_power;
  auto fill = [&](unsigned lo, unsigned hi) {
    for (unsigned n = lo; n <= hi; ++n) want.insert(n);
  };
  if (family == "star-core" && !meta_instance) {
    fill(1, std::min(2u, N));
    bool deep = false;
    for (const auto& [name, rep] : run.criteria) deep |= rep.holds;
    if (run.pn && *run.pn >= 3) deep = true;
    if (run.dif && run.dif->first <= N) fill(static_cast<unsigned>(run.dif->first), N);
    if (deep) fill(1, N);
    if (run.pn)
      fill(1, static_cast<unsigned>(
                  std::min<Exp>(N, std::min<Exp>(*run.pn, N))));
  } else {
    fill(1, N);
  }
  return want;
}

json record_json(const Instance& inst, const InstanceRun& run, bool lean) {
  json r;
  r["id"] = inst.id;
  if (lean) {
    r["count"] = inst.multiplicity;
    r["square"] = run.criteria.at("square").holds;
    if (auto it = run.verdicts.find(2); it != run.verdicts.end())
      r["power2"] = verdict_to_json(it->second);
    if (!run.discrepancies.empty()) {
      r["discrepancies"] = run.discrepancies;
      r["criteria"] = criterion_to_json(run.criteria.at("square"));
    }
    if (!run.meta_failures.empty()) r["metamorphic_failures"] = run.meta_failures;
    return r;
  }
  r["graph"] = graph_to_json(inst.graph);
  r["labeling"] = labeling_to_json(inst.graph, inst.labeling);
  json crit;
  for (const auto& [name, rep] : run.criteria) crit[name] = criterion_to_json(rep);
  r["criteria"] = crit;
  if (run.pn)
    r["pn_bound"] = *run.pn == kUnboundedPower ? json("unbounded") : json(*run.pn);
  if (run.dif) r["noncm_from_power"] = run.dif->first;
  json pw = json::array();
  for (const auto& [n, v] : run.verdicts) pw.push_back(verdict_to_json(v));
  r["powers"] = pw;
  if (!run.discrepancies.empty()) r["discrepancies"] = run.discrepancies;
  if (!run.meta_failures.empty()) r["metamorphic_failures"] = run.meta_failures;
  return r;
}

void evaluate_criteria(const std::string& family, const Instance& inst,
                       InstanceRun& run, const SweepSpec& spec) {
  const WeightedGraph& g = inst.graph;
  const PairLabeling& L = inst.labeling;
  run.criteria.emplace("square", square_cm_criterion(g, L));
  if (family == "vwc-enum") return;
  run.criteria.emplace("tk", power_ell_criterion(g, L, spec.max_power));
  run.pn = pn_bound(g, L);
  if (family == "path3") run.criteria.emplace("path3", path3_all_n(g));
  if (family == "star-core") {
    run.criteria.emplace("star", star_all_n(g, L));
    run.dif = dif_threshold_in(g, L);
  }
  if (family == "complete-core")
    run.criteria.emplace("complete", complete_core_all_n(g, L));
  if (family == "tree") {
    run.criteria.emplace("tree-necessary", tree_necessary(g, L));
    run.dif = dif_threshold_in(g, L);
  }
}

}  // namespace

OracleVerdict oracle_power_verdict(const MonomialIdeal& I, unsigned n,
                                   const FieldConfig& field, const Budgets& budgets,
                                   bool cross_check) {
  if (n == 0) throw DomainError("powers start at 1");
  return run_power_oracles(power(I, n), n, field, budgets, cross_check,
                           "I^" + std::to_string(n));
}

std::vector<Instance> generate(const SweepSpec& spec) {
  if (spec.max_weight < 1) throw DomainError("weights start at 1");
  if (spec.max_power < 1) throw DomainError("powers start at 1");
  if (spec.max_pairs < 1) throw DomainError("need at least one matched pair");
  if (spec.family == "path3") return gen_path3(spec);
  if (spec.family == "star-core") return gen_star(spec);
  if (spec.family == "complete-core") return gen_complete(spec);
  if (spec.family == "tree") return gen_tree(spec);
  if (spec.family == "vwc-enum") return gen_vwc(spec);
  throw DomainError("unknown family: " + spec.family);
}

SweepOutcome sweep(const SweepSpec& spec) {
  const std::vector<Instance> instances = generate(spec);
  const bool lean = spec.family == "vwc-enum";
  SweepOutcome out;
  json recs = json::array();
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const Instance& inst = instances[idx];
    MonomialIdeal I = edge_ideal(inst.graph);
    InstanceRun run;
    evaluate_criteria(spec.family, inst, run, spec);
    const bool meta_instance =
        spec.metamorphic_stride > 0 && idx % spec.metamorphic_stride == 0;
    for (unsigned n : powers_to_run(spec.family, run, spec, meta_instance)) {
      run.powers.emplace(n, power(I, n));
      OracleVerdict v =
          run_power_oracles(run.powers.at(n), n, spec.field, spec.budgets,
                            meta_instance && n <= 2, inst.id + " power " +
                                                         std::to_string(n));
      ++out.oracle_runs;
      if (!v.ok) ++out.budget_exhausted;
      run.verdicts.emplace(n, std::move(v));
    }
    apply_agreement_rules(inst, run);
    check_pendant_domination(inst, run);
    if (meta_instance) run_metamorphic(inst, I, run, spec);
    out.discrepancies += run.discrepancies.size();
    out.metamorphic_checks += run.meta_checks;
    out.metamorphic_failures += run.meta_failures.size();
    recs.push_back(record_json(inst, run, lean));
  }
  out.instances = instances.size();
  json report;
  report["spec"] = spec_to_json(spec);
  report["summary"] =
      json{{"instances", out.instances},
           {"oracle_runs", out.oracle_runs},
           {"discrepancies", out.discrepancies},
           {"budget_exhausted", out.budget_exhausted},
           {"metamorphic_checks", out.metamorphic_checks},
           {"metamorphic_failures", out.metamorphic_failures}};
  report["instances"] = std::move(recs);
  out.report = std::move(report);
  return out;
}

SearchOutcome search_conjecture(const std::string& name, const SweepSpec& spec) {
  SearchOutcome out;
  json hits = json::array();
  std::size_t skipped = 0;
  SweepSpec s = spec;
  if (name == "vwc-square") {
    s.family = "vwc-enum";
    for (const Instance& inst : generate(s)) {
      MonomialIdeal I = edge_ideal(inst.graph);
      OracleVerdict v2;
      try {
        v2 = oracle_power_verdict(I, 2, s.field, s.budgets, false);
      } catch (const ResourceLimitError&) {
        ++skipped;
        continue;
      }
      if (!v2.ok) {
        ++skipped;
        continue;
      }
      for (unsigned n = 3; n <= s.max_power; ++n) {
        MonomialIdeal J = power(I, n);
        OracleVerdict vn = run_power_oracles(J, n, s.field, s.budgets, false,
                                             inst.id + " power " + std::to_string(n));
        if (!vn.ok) {
          ++skipped;
          continue;
        }
        ++out.examined;
        const bool predicted = v2.cm && vn.unmixed;
        if (predicted == vn.cm) continue;
        bool certified = false;
        try {
          CmVerdict r = is_cm_reisner(J, s.field, s.budgets, vn.dim);
          if (r.is_cm != vn.cm)
            throw OracleDisagreement("oracles disagree while certifying " +
                                     inst.id);
          certified = true;
        } catch (const ResourceLimitError&) {
        }
        hits.push_back(json{{"id", inst.id},
                            {"n", n},
                            {"cm_square", v2.cm},
                            {"unmixed_n", vn.unmixed},
                            {"cm_n", vn.cm},
                            {"certified", certified}});
      }
    }
  } else if (name == "tree-converse") {
    s.family = "tree";
    for (const Instance& inst : generate(s)) {
      CriterionReport rep = tree_necessary(inst.graph, inst.labeling);
      ++out.examined;
      if (!rep.holds) continue;
      MonomialIdeal I = edge_ideal(inst.graph);
      for (unsigned n = 1; n <= s.max_power; ++n) {
        MonomialIdeal J = power(I, n);
        OracleVerdict vn = run_power_oracles(J, n, s.field, s.budgets, false,
                                             inst.id + " power " + std::to_string(n));
        if (!vn.ok) {
          ++skipped;
          continue;
        }
        if (vn.cm) continue;
        bool certified = false;
        try {
          CmVerdict r = is_cm_reisner(J, s.field, s.budgets, vn.dim);
          if (r.is_cm != vn.cm)
            throw OracleDisagreement("oracles disagree while certifying " +
                                     inst.id);
          certified = true;
        } catch (const ResourceLimitError&) {
        }
        hits.push_back(json{{"id", inst.id},
                            {"n", n},
                            {"graph", graph_to_json(inst.graph)},
                            {"depth", vn.depth},
                            {"dim", vn.dim},
                            {"certified", certified}});
      }
    }
  } else {
    throw DomainError("unknown conjecture: " + name);
  }
  out.hits = hits.size();
  json report;
  report["conjecture"] = name;
  report["spec"] = spec_to_json(s);
  report["summary"] = json{{"examined", out.examined},
                           {"skipped", skipped},
                           {"hits", out.hits}};
  report["hits"] = std::move(hits);
  out.report = std::move(report);
  return out;
}

std::string render_table(const json& report) {
  std::ostringstream os;
  if (report.contains("conjecture")) {
    os << "conjecture " << report["conjecture"].get<std::string>() << ": examined "
       << report["summary"]["examined"] << ", hits " << report["summary"]["hits"]
       << "\n";
    for (const auto& h : report["hits"])
      os << "  HIT " << h["id"].get<std::string>() << " at n=" << h["n"]
         << (h["certified"].get<bool>() ? " (certified)" : " (single oracle)")
         << "\n";
    return os.str();
  }
  for (const auto& r : report["instances"]) {
    os << r["id"].get<std::string>() << "  ";
    if (r.contains("criteria") && r["criteria"].is_object()) {
      for (auto it = r["criteria"].begin(); it != r["criteria"].end(); ++it)
        os << it.key() << (it.value()["holds"].get<bool>() ? ":Y " : ":N ");
    } else if (r.contains("square")) {
      os << "square" << (r["square"].get<bool>() ? ":Y " : ":N ");
    }
    if (r.contains("pn_bound")) os << "pn:" << r["pn_bound"].dump() << " ";
    os << "| ";
    auto show = [&](const json& v) {
      os << "n" << v["n"] << ":";
      if (v.contains("budget_exhausted")) {
        os << "budget ";
        return;
      }
      os << (v["cm"].get<bool>() ? "CM" : "cm")
         << (v["unmixed"].get<bool>() ? ",U" : ",u") << " ";
    };
    if (r.contains("powers"))
      for (const auto& v : r["powers"]) show(v);
    else if (r.contains("power2"))
      show(r["power2"]);
    if (r.contains("discrepancies")) os << " DISCREPANCY";
    if (r.contains("metamorphic_failures")) os << " META-FAIL";
    os << "\n";
  }
  const auto& s = report["summary"];
  os << "instances=" << s["instances"] << " oracle_runs=" << s["oracle_runs"]
     << " discrepancies=" << s["discrepancies"]
     << " budget_exhausted=" << s["budget_exhausted"]
     << " metamorphic=" << s["metamorphic_checks"] << "/"
     << s["metamorphic_failures"] << " failures\n";
  return os.str();
}

}  // namespace weid
