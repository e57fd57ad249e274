#pragma once

// Instance generation, criteria-versus-oracle sweeps, and conjecture
// searches.
//
// A sweep enumerates a family of weighted graphs, evaluates every applicable
// fast predicate, runs the exact oracles on powers of the edge ideal, and
// records any provable disagreement.  The agreement rules encode exactly what
// each predicate asserts:
//
//   * square criterion        <=> CM at n = 2   (both directions);
//   * coefficient-ell family   => CM at n <= ell;
//   * pendant bound k_max      => CM at n <= k_max;
//   * path criterion          <=> CM at every n, and its failure forces
//                                 non-CM at every n >= 2;
//   * star criterion           => CM and unmixed at every n (its failure
//                                 carries no bounded-power consequence);
//   * complete-core criterion <=> CM at every n, and its failure forces
//                                 non-CM at every n >= 2;
//   * tree necessary conditions: a violated core-edge bound forces non-CM
//                                 at n = 2; an equal-weight adjacent pair
//                                 forces non-CM at every n >= the
//                                 double-spoke threshold.
//
// Per-instance metamorphic assertions (localization and restriction
// identities, pendant-deletion monotonicity for unmixedness and CM, matched
// pair deletion at n = 2, pendant-weight domination under unmixedness,
// localization preserving CM) run on a deterministic stride of instances.
//
// Reports are deterministic: a fixed spec yields a byte-identical JSON
// document.  Wall-clock timings are therefore never written into reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weid/cm.hpp"
#include "weid/criteria.hpp"
#include "weid/graph.hpp"

namespace weid {

/// Thrown when the two independent CM oracles contradict each other; this is
/// never downgraded to a recorded discrepancy.
struct OracleDisagreement : std::logic_error {
  using std::logic_error::logic_error;
};

struct Instance {
  std::string id;
  WeightedGraph graph;
  PairLabeling labeling;        // pendant matching or cover labeling
  std::size_t multiplicity = 1; // labeled instances collapsed into this one
};

struct SweepSpec {
  std::string family;            // path3 | star-core | complete-core | tree | vwc-enum
  Exp max_weight = 5;            // W: weights range over 1..W
  unsigned max_power = 3;        // N: oracle powers 1..N
  std::size_t max_pairs = 3;     // cover-side size cap
  std::size_t tree_count = 40;   // random trees drawn by the tree family
  std::uint64_t seed = 1;        // tree family RNG seed
  std::size_t metamorphic_stride = 1;  // every k-th instance; 0 disables
  Budgets budgets;
  FieldConfig field = FieldConfig::q();
};

/// Exact verdict for one power, or a recorded budget exhaustion.
struct OracleVerdict {
  unsigned n = 0;
  bool ok = false;              // false: budget exhausted, error holds why
  std::string error;
  bool cm = false;
  bool unmixed = false;
  std::int64_t depth = -1;
  std::int64_t dim = -1;
  bool reisner_checked = false; // second oracle ran and agreed
};

/// Depth-oracle verdict for I^n, with unmixedness from the decomposition and
/// an optional cross-check by the polarization oracle (throws
/// OracleDisagreement if they differ).  Budget exhaustion of the depth oracle
/// is recorded in the verdict; an infeasible cross-check is skipped silently.
OracleVerdict oracle_power_verdict(const MonomialIdeal& I, unsigned n,
                                   const FieldConfig& field, const Budgets& budgets,
                                   bool cross_check);

/// Deterministic instance stream for a family; DomainError on unknown
/// families, ResourceLimitError when the family size cap is exceeded
/// (vwc-enum supports at most six vertices).
std::vector<Instance> generate(const SweepSpec& spec);

struct SweepOutcome {
  nlohmann::json report;
  std::size_t instances = 0;
  std::size_t oracle_runs = 0;
  std::size_t discrepancies = 0;      // recorded criterion/oracle conflicts
  std::size_t budget_exhausted = 0;   // instance-powers skipped for budget
  std::size_t metamorphic_checks = 0;
  std::size_t metamorphic_failures = 0;
};

SweepOutcome sweep(const SweepSpec& spec);

struct SearchOutcome {
  nlohmann::json report;
  std::size_t examined = 0;
  std::size_t hits = 0;  // counterexample candidates (also discrepancies)
};

/// name = "vwc-square": hunt instances where CM of I^n (n >= 3) differs from
/// [CM of I^2 and unmixedness of I^n].
/// name = "tree-converse": hunt random weighted trees satisfying every
/// necessary condition whose I^n still fails to be CM for some tested n.
/// Hits are re-certified with both oracles where feasible.
SearchOutcome search_conjecture(const std::string& name, const SweepSpec& spec);

/// Human-readable rendering of a sweep or search report.
std::string render_table(const nlohmann::json& report);

}  // namespace weid
