// Command-line front end: exact Cohen-Macaulayness checks, decompositions,
// symbolic powers, fast criteria, criteria-versus-oracle sweeps, and
// conjecture searches over weighted edge ideals.
//
// Exit codes: 0 success; 1 usage or input error; 2 a discrepancy was found
// (criterion versus oracle, metamorphic failure, oracle disagreement, or a
// search hit); 3 an enumeration or certification budget was exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "weid/cm.hpp"
#include "weid/criteria.hpp"
#include "weid/decompose.hpp"
#include "weid/graph.hpp"
#include "weid/harness.hpp"
#include "weid/io.hpp"

namespace {

using nlohmann::json;
using namespace weid;

constexpr int kExitOk = 0, kExitUsage = 1, kExitDiscrepancy = 2, kExitBudget = 3;

FieldConfig parse_field(const std::string& s) {
  if (s == "q") return FieldConfig::q();
  if (s.rfind("fp:", 0) == 0) return FieldConfig::fp(std::stoull(s.substr(3)));
  throw DomainError("field must be q or fp:<prime>, got " + s);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

struct CommonOpts {
  std::string ideal_file, graph_file;
  std::string field = "q";
  std::uint64_t budget_faces = Budgets{}.faces;
  std::uint64_t budget_monomials = Budgets{}.monomials;

  Budgets budgets() const { return Budgets{budget_faces, budget_monomials}; }

  MonomialIdeal load() const {
    if (ideal_file.empty() == graph_file.empty())
      throw DomainError("pass exactly one of --ideal or --graph");
    if (!ideal_file.empty()) return load_ideal_file(ideal_file);
    return edge_ideal(load_graph_file(graph_file));
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_ideal = true) {
  if (with_ideal)
    cmd->add_option("--ideal", o.ideal_file, "monomial ideal JSON file");
  cmd->add_option("--graph", o.graph_file, "weighted graph JSON file");
  cmd->add_option("--field", o.field, "homology coefficients: q or fp:<prime>");
  cmd->add_option("--budget-faces", o.budget_faces,
                  "face/cell enumeration budget for the homology engine");
  cmd->add_option("--budget-monomials", o.budget_monomials,
                  "candidate-monomial budget for the depth oracle");
}

void emit(const json& j, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_file);
    if (!f) throw DomainError("cannot write " + out_file);
    f << j.dump(2) << "\n";
  }
}

int cmd_check_cm(const CommonOpts& o, unsigned power_n, const std::string& method) {
  auto t0 = std::chrono::steady_clock::now();
  MonomialIdeal I = power(o.load(), power_n);
  FieldConfig field = parse_field(o.field);
  json out{{"method", method}, {"power", power_n}};
  out["unmixed"] = primary_decomposition(I).unmixed;
  std::optional<CmVerdict> depth_v, reisner_v;
  if (method == "depth" || method == "both")
    depth_v = is_cm_depth(I, field, o.budgets());
  if (method == "reisner" || method == "both")
    reisner_v = is_cm_reisner(I, field, o.budgets());
  if (depth_v && reisner_v && depth_v->is_cm != reisner_v->is_cm) {
    std::cerr << "oracle disagreement: depth says "
              << (depth_v->is_cm ? "CM" : "not CM")
              << ", polarization says the opposite\n";
    return kExitDiscrepancy;
  }
  const CmVerdict& v = depth_v ? *depth_v : *reisner_v;
  out["is_cm"] = v.is_cm;
  out["depth"] = v.depth;
  out["dim"] = v.dim;
  if (!v.is_cm && !v.witness.empty()) out["witness"] = v.witness;
  out["elapsed_ms"] = ms_since(t0);
  emit(out, "");
  return kExitOk;
}

int cmd_decompose(const CommonOpts& o) {
  MonomialIdeal I = o.load();
  Decomposition dec = primary_decomposition(I);
  const Ring& ring = *I.ring();
  json comps = json::array();
  for (const auto& c : dec.components) {
    json prime = json::array();
    c.prime.for_each([&](std::size_t v) { prime.push_back(ring.name(v)); });
    comps.push_back(json{{"prime", prime},
                         {"generators", ideal_to_json(c.ideal)["generators"]}});
  }
  emit(json{{"components", comps},
            {"unmixed", dec.unmixed},
            {"height", dec.height}},
       "");
  return kExitOk;
}

int cmd_symbolic(const CommonOpts& o, std::uint64_t n) {
  MonomialIdeal I = o.load();
  MonomialIdeal sym = symbolic_power(I, n);
  emit(json{{"n", n},
            {"ideal", ideal_to_json(sym)},
            {"equals_power", sym == power(I, n)}},
       "");
  return kExitOk;
}

int cmd_criteria(const std::string& graph_file, const std::string& theorem, Exp ell) {
  if (graph_file.empty()) throw DomainError("criteria needs --graph");
  WeightedGraph g = load_graph_file(graph_file);
  auto report_json = [&](const CriterionReport& r) {
    json v = json::array();
    for (const auto& x : r.violations)
      v.push_back(json{{"condition", x.condition}, {"detail", x.detail}});
    json j{{"theorem", r.theorem}, {"holds", r.holds}, {"violations", v}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
  };
  if (theorem == "path3") {
    emit(report_json(path3_all_n(g)), "");
    return kExitOk;
  }
  std::optional<PairLabeling> L = pendant_matching(g);
  if (!L && (theorem == "square" || theorem == "tk")) L = find_vwc_labeling(g);
  if (!L)
    throw DomainError(
        "no pendant perfect matching (and, for square/tk, no order-compatible "
        "labeling) found");
  json out;
  if (theorem == "square") out = report_json(square_cm_criterion(g, *L));
  else if (theorem == "tk") out = report_json(power_ell_criterion(g, *L, ell));
  else if (theorem == "pn") {
    Exp k = pn_bound(g, *L);
    out = json{{"theorem", "pn"},
               {"k_max", k == kUnboundedPower ? json("unbounded") : json(k)}};
  } else if (theorem == "star") out = report_json(star_all_n(g, *L));
  else if (theorem == "complete") out = report_json(complete_core_all_n(g, *L));
  else if (theorem == "tree-necessary") out = report_json(tree_necessary(g, *L));
  else throw DomainError("unknown theorem: " + theorem);
  emit(out, "");
  return kExitOk;
}

std::size_t default_stride(const std::string& family) {
  if (family == "star-core") return 37;
  if (family == "tree") return 5;
  if (family == "vwc-enum") return 101;
  return 1;
}

int finish_report(const json& report, const std::string& out_file,
                  const std::string& format, std::size_t discrepancies,
                  std::size_t meta_failures, std::size_t budget, std::size_t hits,
                  double elapsed) {
  if (!out_file.empty()) emit(report, out_file);
  if (format == "table") std::cout << render_table(report);
  else if (out_file.empty()) emit(report, "");
  std::cerr << "elapsed: " << elapsed << " ms\n";
  if (discrepancies > 0 || meta_failures > 0 || hits > 0) return kExitDiscrepancy;
  if (budget > 0) return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Cohen-Macaulayness of powers of weighted edge ideals: oracles, "
      "fast criteria, and cross-checking harness"};
  app.require_subcommand(1);

  // check-cm
  CommonOpts cm_opts;
  unsigned power_n = 1;
  std::string method = "both";
  auto* c_cm = app.add_subcommand("check-cm", "decide Cohen-Macaulayness exactly");
  add_common(c_cm, cm_opts);
  c_cm->add_option("--power", power_n, "test I^n (default 1)");
  c_cm->add_option("--method", method, "reisner | depth | both (default both)")
      ->check(CLI::IsMember({"reisner", "depth", "both"}));

  // decompose
  CommonOpts dec_opts;
  auto* c_dec =
      app.add_subcommand("decompose", "irredundant primary decomposition");
  add_common(c_dec, dec_opts);

  // symbolic
  CommonOpts sym_opts;
  std::uint64_t sym_n = 2;
  auto* c_sym = app.add_subcommand("symbolic", "symbolic power of the ideal");
  add_common(c_sym, sym_opts);
  c_sym->add_option("--n", sym_n, "symbolic power exponent")->required();

  // criteria
  std::string crit_graph, crit_theorem;
  Exp crit_ell = 2;
  auto* c_crit =
      app.add_subcommand("criteria", "evaluate a fast combinatorial criterion");
  c_crit->add_option("--graph", crit_graph, "weighted graph JSON file")->required();
  c_crit
      ->add_option("--theorem", crit_theorem,
                   "square | tk | pn | path3 | star | complete | tree-necessary")
      ->required();
  c_crit->add_option("--ell", crit_ell, "coefficient for tk (default 2)");

  // sweep
  CommonOpts sweep_opts;
  SweepSpec spec;
  std::string family, out_file, format = "json";
  long long stride = -1;
  auto* c_sweep =
      app.add_subcommand("sweep", "criteria-versus-oracle sweep over a family");
  c_sweep
      ->add_option("--family", family,
                   "path3 | star-core | complete-core | tree | vwc-enum")
      ->required();
  c_sweep->add_option("--max-weight", spec.max_weight, "largest edge weight");
  c_sweep->add_option("--max-power", spec.max_power, "largest tested power");
  c_sweep->add_option("--max-pairs", spec.max_pairs, "largest cover-side size");
  c_sweep->add_option("--tree-count", spec.tree_count, "random trees to draw");
  c_sweep->add_option("--seed", spec.seed, "random seed for the tree family");
  c_sweep->add_option("--stride", stride,
                      "metamorphic stride (0 disables; default per family)");
  c_sweep->add_option("--out", out_file, "write the JSON report here");
  c_sweep->add_option("--format", format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  add_common(c_sweep, sweep_opts, false);

  // search
  CommonOpts search_opts;
  SweepSpec search_spec;
  search_spec.max_weight = 3;
  search_spec.max_pairs = 2;
  std::string conjecture, search_out, search_format = "json";
  auto* c_search =
      app.add_subcommand("search", "hunt counterexamples to a conjecture");
  c_search->add_option("--conjecture", conjecture, "vwc-square | tree-converse")
      ->required();
  c_search->add_option("--max-weight", search_spec.max_weight, "largest edge weight");
  c_search->add_option("--max-power", search_spec.max_power, "largest tested power");
  c_search->add_option("--max-pairs", search_spec.max_pairs,
                       "largest cover-side size");
  c_search->add_option("--tree-count", search_spec.tree_count,
                       "random trees to draw");
  c_search->add_option("--seed", search_spec.seed, "random seed");
  c_search->add_option("--out", search_out, "write the JSON report here");
  c_search->add_option("--format", search_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  add_common(c_search, search_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_cm) return cmd_check_cm(cm_opts, power_n, method);
    if (*c_dec) return cmd_decompose(dec_opts);
    if (*c_sym) return cmd_symbolic(sym_opts, sym_n);
    if (*c_crit) return cmd_criteria(crit_graph, crit_theorem, crit_ell);
    if (*c_sweep) {
      auto t0 = std::chrono::steady_clock::now();
      spec.family = family;
      spec.metamorphic_stride =
          stride < 0 ? default_stride(family) : static_cast<std::size_t>(stride);
      spec.field = parse_field(sweep_opts.field);
      spec.budgets = sweep_opts.budgets();
      SweepOutcome out = sweep(spec);
      return finish_report(out.report, out_file, format, out.discrepancies,
                           out.metamorphic_failures, out.budget_exhausted, 0,
                           ms_since(t0));
    }
    if (*c_search) {
      auto t0 = std::chrono::steady_clock::now();
      search_spec.field = parse_field(search_opts.field);
      search_spec.budgets = search_opts.budgets();
      SearchOutcome out = search_conjecture(conjecture, search_spec);
      std::size_t budget_skips = out.report["summary"]["skipped"].get<std::size_t>();
      return finish_report(out.report, search_out, search_format, 0, 0,
                           budget_skips, out.hits, ms_since(t0));
    }
  } catch (const OracleDisagreement& e) {
    std::cerr << "FATAL oracle disagreement: " << e.what() << "\n";
    return kExitDiscrepancy;
  } catch (const ResourceLimitError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
