#pragma once

// The combinatorial power-criteria as pure predicates over a weighted graph
// plus a labeling or pendant matching.  Every predicate re-validates its
// structural hypothesis and reports all violated inequalities, never just
// the first.  All ceiling arithmetic is integer-exact.
//
// Semantics of the verdicts (what "holds" asserts about powers of the edge
// ideal I of the weighted graph):
//   square:          holds <=> I^2 is CM                        (equivalence)
//   tk (ell):        holds  => I^n CM for n = 1..ell            (sufficient)
//   pn:              k_max  => I^n CM for n = 1..k_max          (sufficient)
//   path3:           holds <=> I^n CM for all n >= 1            (equivalence)
//   star:            holds <=> I^n CM for all n >= 1            (equivalence)
//   complete:        holds <=> I^n CM for all n >= 1            (equivalence)
//   tree-necessary:  I^n CM for all n  => holds                 (necessary)
//   dif threshold:   equal-weight double-spoke core => I^n not CM
//                    for every n >= the returned threshold.

#include <string>
#include <vector>

#include "weid/graph.hpp"

namespace weid {

/// One violated condition: a stable condition id plus a human-readable
/// instantiation with the offending vertices and numbers.
struct Violation {
  std::string condition;
  std::string detail;
};

struct CriterionReport {
  std::string theorem;
  bool holds = false;
  std::vector<Violation> violations;  // holds <=> empty
  std::vector<std::string> notes;     // informational, never affects holds
};

/// Integer ceiling a/b for b >= 1.
inline Exp ceil_div(Exp a, Exp b) { return (a + b - 1) / b; }

/// Sentinel for "CM for every power" bounds.
inline constexpr Exp kUnboundedPower = UINT64_MAX;

/// Second power of the edge ideal of a very well-covered graph, against an
/// order-compatible labeling L (validated; invalid -> DomainError):
///   (1) 2 w(x_i z_j) <= min{w(x_i y_i), w(x_j y_j)} for each edge x_i z_j
///       with i != j and z_j in {x_j, y_j};
///   (2) 2 w(x_i z_j) <= min{w(x_i y_k), w(x_k z_j)} for all distinct
///       i, j, k with x_i y_k and x_k z_j edges.
CriterionReport square_cm_criterion(const WeightedGraph& g, const PairLabeling& L);

/// Same condition family with coefficient ell in place of 2; implies CM of
/// the n-th power for every n = 1..ell.  Pre: ell >= 1.
CriterionReport power_ell_criterion(const WeightedGraph& g, const PairLabeling& L, Exp ell);

/// Largest k >= 1 with w(x_i y_i) >= k * w(x_i x_j) for every i and every
/// neighbor x_j of x_i inside the matched cover side; CM of I^n follows for
/// n = 1..k.  Returns 0 when no such k exists, kUnboundedPower when no
/// cover-side edge constrains k at all.  M validated as a pendant matching.
Exp pn_bound(const WeightedGraph& g, const PairLabeling& M);

/// Path on four vertices with edges {ab, ax, by} (shape checked; wrong
/// shape -> DomainError): all powers CM iff min{w(ax), w(by)} >= 2 w(ab).
CriterionReport path3_all_n(const WeightedGraph& g);

/// Pendant-matched graph whose core is a star (shape checked).  With m_i
/// the pendant weight at x_i and d_i the spoke weight, the conditions are,
/// for every admissible center t (the hub when the core has >= 3 vertices,
/// both ends of a single-edge core, trivially the lone vertex):
///   (1) m_t >= 2 max{d_i};
///   (2) d_i != d_k for distinct spokes, and when d_i < d_k:
///       (a) m_i >= d_i * ceil(d_k / (d_k - d_i)),
///       (b) m_k >= d_k * max{2, ceil(d_k / (d_k - d_i)) - 2}.
/// Demanding every admissible center makes the one-edge core agree with the
/// path criterion.
CriterionReport star_all_n(const WeightedGraph& g, const PairLabeling& M);

/// Pendant-matched graph on >= 2 matched pairs whose core is complete with
/// every core weight equal to 1 (all checked; violations of the hypothesis
/// -> DomainError): all powers CM iff every pendant weight is >= 2.
CriterionReport complete_core_all_n(const WeightedGraph& g, const PairLabeling& M);

/// Necessary conditions for all powers of a weighted tree to be CM (tree +
/// matching validated).  Over core edges x_i x_j (weight w_ij) and core
/// paths x_i - x_j - x_k:
///   (1) 2 w_ij <= min{m_i, m_j};
///   (2) w_ij != w_jk, and when w_ij < w_jk:
///       (a) m_i >= w_ij * ceil(w_jk / (w_jk - w_ij)),
///       (b) m_k >= w_jk * (ceil(w_jk / (w_jk - w_ij)) - 2).
/// Necessary only: a violation certifies some power is not CM; holding
/// proves nothing by itself.  Where (2b) differs from the star form (which
/// takes max{2, ...}), a note records that the gap is covered by (1).
CriterionReport tree_necessary(const WeightedGraph& g, const PairLabeling& M);

/// Double-spoke core a-b-c with equal core weights m (shape checked: six
/// vertices, pendant-matched, core a path, both core weights equal):
/// returns the least n0 with I^n not CM for every n >= n0, namely
/// ceil(max{p, r} / m) + 2 with p, r the pendant weights at the outer core
/// vertices.
Exp dif_noncm_threshold(const WeightedGraph& g);

}  // namespace weid
