#include "weid/criteria.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace weid {
namespace {

std::string fmt_edge(const WeightedGraph& g, std::size_t u, std::size_t v) {
  return "{" + g.label(u) + "," + g.label(v) + "}";
}

std::string fmt_w(const WeightedGraph& g, std::size_t u, std::size_t v, Exp w) {
  return "w" + fmt_edge(g, u, v) + " = " + std::to_string(w);
}

/// Throws DomainError unless M is a pendant perfect matching of g: the pairs
/// partition the vertices, every pair is an edge, and every y-side vertex is
/// a leaf.
void require_pendant_matching(const WeightedGraph& g, const PairLabeling& M) {
  if (M.t() == 0 || 2 * M.t() != g.n())
    throw DomainError("pendant matching must pair up all vertices");
  std::vector<char> used(g.n(), 0);
  for (std::size_t i = 0; i < M.t(); ++i) {
    std::size_t x = M.x(i), y = M.y(i);
    if (x >= g.n() || y >= g.n() || x == y)
      throw DomainError("pendant matching refers to invalid vertices");
    if (used[x] || used[y])
      throw DomainError("pendant matching reuses a vertex");
    used[x] = used[y] = 1;
    if (!g.has_edge(x, y))
      throw DomainError("matched pair " + fmt_edge(g, x, y) + " is not an edge");
    if (g.degree(y) != 1)
      throw DomainError("matched vertex " + g.label(y) + " is not a leaf");
  }
}

/// Position of each M.x(i) inside the sorted x-side; core_subgraph lists core
/// vertices in ascending original index, so this maps pair index -> core
/// vertex index.
std::vector<std::size_t> core_index_of_pair(const PairLabeling& M) {
  std::vector<std::size_t> xs;
  for (std::size_t i = 0; i < M.t(); ++i) xs.push_back(M.x(i));
  std::vector<std::size_t> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> out(M.t());
  for (std::size_t i = 0; i < M.t(); ++i)
    out[i] = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), xs[i]) - sorted.begin());
  return out;
}

}  // namespace

CriterionReport power_ell_criterion(const WeightedGraph& g, const PairLabeling& L,
                                    Exp ell) {
  if (ell < 1) throw DomainError("power criterion needs a coefficient >= 1");
  if (std::string reason = check_labeling(g, L); !reason.empty())
    throw DomainError("invalid labeling: " + reason);
  CriterionReport rep;
  rep.theorem = "tk";

  const std::size_t t = L.t();
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pair_of(g.n(), npos);  // pair index of any vertex
  std::vector<char> is_x(g.n(), 0);
  for (std::size_t i = 0; i < t; ++i) {
    pair_of[L.x(i)] = pair_of[L.y(i)] = i;
    is_x[L.x(i)] = 1;
  }
  std::vector<Exp> m(t);  // matched-edge weights
  for (std::size_t i = 0; i < t; ++i) m[i] = *g.weight(L.x(i), L.y(i));

  // (1): every edge between distinct pair classes.
  for (const auto& e : g.edges()) {
    std::size_t i = pair_of[e.u], j = pair_of[e.v];
    if (i == j) continue;  // matched edge
    Exp bound = std::min(m[i], m[j]);
    Exp lhs = checked_mul(ell, e.w);
    if (lhs > bound) {
      rep.violations.push_back(
          {"1", "edge " + fmt_edge(g, e.u, e.v) + ": need " +
                    std::to_string(ell) + "*w <= min(" +
                    fmt_w(g, L.x(i), L.y(i), m[i]) + ", " +
                    fmt_w(g, L.x(j), L.y(j), m[j]) + "); got " +
                    std::to_string(lhs)});
    }
  }

  // (2): chains x_i y_k, x_k z_j force the same bound on w(x_i z_j).
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t k = 0; k < t; ++k) {
      if (k == i || !g.has_edge(L.x(i), L.y(k))) continue;
      Exp w_iyk = *g.weight(L.x(i), L.y(k));
      for (const auto& e : g.edges()) {
        std::size_t other;
        if (e.u == L.x(k)) other = e.v;
        else if (e.v == L.x(k)) other = e.u;
        else continue;
        std::size_t j = pair_of[other];
        if (j == i || j == k) continue;
        // other = z_j (either x_j or y_j, both allowed).
        auto w_ij = g.weight(L.x(i), other);
        if (!w_ij)
          throw std::logic_error("validated labeling lacks a forced edge");
        Exp bound = std::min(w_iyk, e.w);
        Exp lhs = checked_mul(ell, *w_ij);
        if (lhs > bound) {
          rep.violations.push_back(
              {"2", "chain " + fmt_edge(g, L.x(i), L.y(k)) + ", " +
                        fmt_edge(g, L.x(k), other) + ": need " +
                        std::to_string(ell) + "*" +
                        fmt_w(g, L.x(i), other, *w_ij) + " <= min(" +
                        std::to_string(w_iyk) + ", " + std::to_string(e.w) +
                        "); got " + std::to_string(lhs)});
        }
      }
    }
  }

  rep.holds = rep.violations.empty();
  return rep;
}

CriterionReport square_cm_criterion(const WeightedGraph& g, const PairLabeling& L) {
  CriterionReport rep = power_ell_criterion(g, L, 2);
  rep.theorem = "square";
  return rep;
}

Exp pn_bound(const WeightedGraph& g, const PairLabeling& M) {
  require_pendant_matching(g, M);
  bool any_core_edge = false;
  Exp k_max = kUnboundedPower;
  for (std::size_t i = 0; i < M.t(); ++i) {
    std::size_t xi = M.x(i);
    Exp d = 0;
    for (std::size_t j = 0; j < M.t(); ++j) {
      if (j == i) continue;
      if (auto w = g.weight(xi, M.x(j))) d = std::max(d, *w);
    }
    if (d == 0) continue;  // no cover-side neighbor constrains x_i
    any_core_edge = true;
    k_max = std::min(k_max, *g.weight(xi, M.y(i)) / d);
  }
  return any_core_edge ? k_max : kUnboundedPower;
}

CriterionReport path3_all_n(const WeightedGraph& g) {
  if (g.n() != 4 || g.num_edges() != 3 || !g.is_connected())
    throw DomainError("expected a path on four vertices");
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t a = npos, b = npos;
  for (std::size_t v = 0; v < 4; ++v) {
    if (g.degree(v) == 2) (a == npos ? a : b) = v;
  }
  if (b == npos || !g.has_edge(a, b))
    throw DomainError("expected a path on four vertices");
  auto pendant_of = [&](std::size_t c, std::size_t other) {
    std::uint64_t rest = g.adj(c) & ~(std::uint64_t{1} << other);
    return static_cast<std::size_t>(std::countr_zero(rest));
  };
  std::size_t la = pendant_of(a, b), lb = pendant_of(b, a);
  Exp k = *g.weight(a, b), p = *g.weight(a, la), q = *g.weight(b, lb);

  CriterionReport rep;
  rep.theorem = "path3";
  Exp bound = checked_mul(Exp{2}, k);
  for (auto [c, leaf, w] : {std::tuple{a, la, p}, std::tuple{b, lb, q}}) {
    if (w < bound) {
      rep.violations.push_back(
          {"pendant-weight", "need " + fmt_w(g, c, leaf, w) + " >= 2*" +
                                 fmt_w(g, a, b, k) + " = " +
                                 std::to_string(bound)});
    }
  }
  rep.holds = rep.violations.empty();
  return rep;
}

CriterionReport star_all_n(const WeightedGraph& g, const PairLabeling& M) {
  require_pendant_matching(g, M);
  WeightedGraph core = core_subgraph(g, M);
  std::vector<std::size_t> centers = star_centers(core);
  if (centers.empty()) throw DomainError("core is not a star");
  std::vector<std::size_t> cidx = core_index_of_pair(M);
  std::vector<Exp> m(core.n());  // pendant weight per core vertex
  for (std::size_t i = 0; i < M.t(); ++i)
    m[cidx[i]] = *g.weight(M.x(i), M.y(i));

  CriterionReport rep;
  rep.theorem = "star";
  for (std::size_t c : centers) {
    std::vector<std::pair<std::size_t, Exp>> spokes;  // (core vertex, weight)
    Exp dmax = 0;
    for (std::size_t v = 0; v < core.n(); ++v) {
      if (v == c) continue;
      auto w = core.weight(c, v);
      if (!w) throw DomainError("core is not a star");
      spokes.emplace_back(v, *w);
      dmax = std::max(dmax, *w);
    }
    if (spokes.empty()) continue;
    if (Exp need = checked_mul(Exp{2}, dmax); m[c] < need) {
      rep.violations.push_back(
          {"1", "center " + core.label(c) + ": need pendant weight " +
                    std::to_string(m[c]) + " >= 2*max spoke weight = " +
                    std::to_string(need)});
    }
    for (std::size_t A = 0; A < spokes.size(); ++A) {
      for (std::size_t B = A + 1; B < spokes.size(); ++B) {
        auto [vi, di] = spokes[A];
        auto [vk, dk] = spokes[B];
        if (di == dk) {
          rep.violations.push_back(
              {"2", "center " + core.label(c) + ": spokes to " +
                        core.label(vi) + " and " + core.label(vk) +
                        " carry equal weight " + std::to_string(di)});
          continue;
        }
        if (di > dk) {
          std::swap(vi, vk);
          std::swap(di, dk);
        }
        Exp c1 = ceil_div(dk, dk - di);
        if (Exp need = checked_mul(di, c1); m[vi] < need) {
          rep.violations.push_back(
              {"2a", "center " + core.label(c) + ", spokes " + core.label(vi) +
                         "/" + core.label(vk) + ": need pendant weight at " +
                         core.label(vi) + " = " + std::to_string(m[vi]) +
                         " >= " + std::to_string(di) + "*ceil(" +
                         std::to_string(dk) + "/" + std::to_string(dk - di) +
                         ") = " + std::to_string(need)});
        }
        if (Exp need = checked_mul(dk, std::max<Exp>(2, c1 - 2)); m[vk] < need) {
          rep.violations.push_back(
              {"2b", "center " + core.label(c) + ", spokes " + core.label(vi) +
                         "/" + core.label(vk) + ": need pendant weight at " +
                         core.label(vk) + " = " + std::to_string(m[vk]) +
                         " >= " + std::to_string(dk) + "*max(2, ceil(" +
                         std::to_string(dk) + "/" + std::to_string(dk - di) +
                         ")-2) = " + std::to_string(need)});
        }
      }
    }
  }
  rep.holds = rep.violations.empty();
  return rep;
}

CriterionReport complete_core_all_n(const WeightedGraph& g, const PairLabeling& M) {
  require_pendant_matching(g, M);
  if (M.t() < 2) throw DomainError("complete-core criterion needs at least two pairs");
  WeightedGraph core = core_subgraph(g, M);
  if (!is_complete(core)) throw DomainError("core is not complete");
  for (const auto& e : core.edges()) {
    if (e.w != 1)
      throw DomainError("core edge " + fmt_edge(core, e.u, e.v) +
                        " has weight " + std::to_string(e.w) +
                        "; the criterion requires weight 1 on the core");
  }
  CriterionReport rep;
  rep.theorem = "complete";
  for (std::size_t i = 0; i < M.t(); ++i) {
    Exp mi = *g.weight(M.x(i), M.y(i));
    if (mi < 2) {
      rep.violations.push_back(
          {"pendant-weight", "need " + fmt_w(g, M.x(i), M.y(i), mi) + " >= 2"});
    }
  }
  rep.holds = rep.violations.empty();
  return rep;
}

CriterionReport tree_necessary(const WeightedGraph& g, const PairLabeling& M) {
  if (!g.is_tree()) throw DomainError("expected a tree");
  require_pendant_matching(g, M);
  WeightedGraph core = core_subgraph(g, M);
  std::vector<std::size_t> cidx = core_index_of_pair(M);
  std::vector<Exp> m(core.n());
  std::vector<std::pair<std::size_t, std::size_t>> match(core.n());
  for (std::size_t i = 0; i < M.t(); ++i) {
    m[cidx[i]] = *g.weight(M.x(i), M.y(i));
    match[cidx[i]] = {M.x(i), M.y(i)};
  }

  CriterionReport rep;
  rep.theorem = "tree-necessary";
  for (const auto& e : core.edges()) {
    Exp lhs = checked_mul(Exp{2}, e.w);
    if (lhs > std::min(m[e.u], m[e.v])) {
      rep.violations.push_back(
          {"1", "core edge " + fmt_edge(core, e.u, e.v) + ": need 2*" +
                    std::to_string(e.w) + " <= min(pendant weights " +
                    std::to_string(m[e.u]) + ", " + std::to_string(m[e.v]) +
                    ")"});
    }
  }
  // Adjacent core-edge pairs x_i - x_j - x_k.
  for (std::size_t j = 0; j < core.n(); ++j) {
    std::vector<std::pair<std::size_t, Exp>> inc;
    for (std::size_t v = 0; v < core.n(); ++v) {
      if (v == j) continue;
      if (auto w = core.weight(j, v)) inc.emplace_back(v, *w);
    }
    for (std::size_t A = 0; A < inc.size(); ++A) {
      for (std::size_t B = A + 1; B < inc.size(); ++B) {
        auto [vi, wi] = inc[A];
        auto [vk, wk] = inc[B];
        std::string path = core.label(vi) + "-" + core.label(j) + "-" +
                           core.label(vk);
        if (wi == wk) {
          rep.violations.push_back(
              {"2", "core path " + path + ": adjacent core edges carry equal weight " +
                        std::to_string(wi)});
          continue;
        }
        if (wi > wk) {
          std::swap(vi, vk);
          std::swap(wi, wk);
        }
        Exp c1 = ceil_div(wk, wk - wi);
        if (Exp need = checked_mul(wi, c1); m[vi] < need) {
          rep.violations.push_back(
              {"2a", "core path " + path + ": need pendant weight at " +
                         core.label(vi) + " = " + std::to_string(m[vi]) +
                         " >= " + std::to_string(wi) + "*ceil(" +
                         std::to_string(wk) + "/" + std::to_string(wk - wi) +
                         ") = " + std::to_string(need)});
        }
        Exp weak = checked_mul(wk, c1 - 2);
        if (m[vk] < weak) {
          rep.violations.push_back(
              {"2b", "core path " + path + ": need pendant weight at " +
                         core.label(vk) + " = " + std::to_string(m[vk]) +
                         " >= " + std::to_string(wk) + "*(ceil(" +
                         std::to_string(wk) + "/" + std::to_string(wk - wi) +
                         ")-2) = " + std::to_string(weak)});
        } else if (c1 < 4 && m[vk] < checked_mul(wk, Exp{2})) {
          rep.notes.push_back(
              "core path " + path + ": the all-powers star bound would demand " +
              std::to_string(wk) + "*2 at " + core.label(vk) +
              "; here that gap is caught by condition 1 on the heavier edge");
        }
      }
    }
  }
  rep.holds = rep.violations.empty();
  return rep;
}

Exp dif_noncm_threshold(const WeightedGraph& g) {
  if (g.n() != 6 || !g.is_tree())
    throw DomainError("expected a six-vertex double-spoke tree");
  auto M = pendant_matching(g);
  if (!M) throw DomainError("expected a pendant perfect matching");
  WeightedGraph core = core_subgraph(g, *M);
  std::vector<std::size_t> centers = star_centers(core);
  if (core.n() != 3 || core.num_edges() != 2 || centers.size() != 1)
    throw DomainError("core must be a path on three vertices");
  std::size_t hub = centers[0];
  std::vector<std::size_t> cidx = core_index_of_pair(*M);
  std::vector<Exp> m(core.n());
  for (std::size_t i = 0; i < M->t(); ++i)
    m[cidx[i]] = *g.weight(M->x(i), M->y(i));
  Exp w = 0, outer_max = 0;
  bool first = true;
  for (std::size_t v = 0; v < 3; ++v) {
    if (v == hub) continue;
    Exp wv = *core.weight(hub, v);
    if (first) { w = wv; first = false; }
    else if (wv != w)
      throw DomainError("the two core weights must be equal");
    outer_max = std::max(outer_max, m[v]);
  }
  return ceil_div(outer_max, w) + 2;
}

}  // namespace weid
