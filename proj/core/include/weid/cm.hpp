#pragma once

// Two independent Cohen–Macaulayness oracles for monomial ideals.
//
// Oracle A ("reisner"): polarize to a squarefree ideal — a CM-preserving
// operation — and test the Stanley–Reisner complex by vanishing of link
// homology below the link dimension.
//
// Oracle B ("depth"): compute depth R/I directly as
//     depth R/I = min over monomials f not in I of depth R/sqrt(I : f),
// then compare with dim R/I.  The minimand depends on f only through the
// threshold pattern [f_v >= e] against the distinct positive generator
// exponents e in each variable, so scanning one representative per pattern
// ({0} and each distinct positive generator exponent, per variable) covers
// the whole infinite monomial box exactly.  The depth of each squarefree
// quotient is 1 + the largest i whose i-skeleton is CM.
//
// The two oracles share only the exact-homology primitive; their
// reductions (polarization + links vs. colon radicals + skeleta) are
// disjoint, and the test suite runs them against each other across every
// instance family.

#include <cstdint>
#include <string>

#include "weid/complex.hpp"
#include "weid/decompose.hpp"

namespace weid {

/// Resource ceilings for a single CM decision.
struct Budgets {
  /// Cells (faces or nerve cells) materialized across all homology runs.
  std::uint64_t faces = std::uint64_t{1} << 24;
  /// Candidate-pattern representatives scanned by the depth oracle.
  std::uint64_t monomials = std::uint64_t{1} << 22;
};

/// Outcome of a CM decision.
struct CmVerdict {
  bool is_cm = false;
  /// depth of R/I.  The "reisner" method computes no depth when the answer
  /// is "not CM" and reports -1 there; the "depth" method always fills it.
  std::int64_t depth = -1;
  /// Krull dimension of R/I (always filled; from the minimal primes).
  std::int64_t dim = -1;
  /// "depth" method: a monomial f attaining the minimum, as a string.
  std::string witness;
  std::string method;  // "reisner" or "depth"
};

/// Polarization: each generator x^a becomes the product of the first a
/// copies among fresh squarefree variables name_1, name_2, ...; every
/// original variable gets max(1, highest exponent) copies so the ambient
/// ring never loses a dimension silently.  Preserves CM-ness of the
/// quotient.  Errors: unit ideal -> DomainError; a name collision with an
/// existing variable -> DomainError; more than the variable cap ->
/// ResourceLimitError.
MonomialIdeal polarize(const MonomialIdeal& I);

/// Oracle A.  Proper nonzero ideals only (zero ideal: trivially CM with
/// depth = dim = n; unit ideal: DomainError).
CmVerdict is_cm_reisner(const MonomialIdeal& I, const FieldConfig& field = FieldConfig::q(),
                        const Budgets& budgets = Budgets{}, std::int64_t dim_hint = -1);

/// Both oracles accept an optional precomputed Krull dimension of R/I
/// (dim_hint >= 0) so callers that already decomposed I can skip a second
/// decomposition; the value is trusted.
///
/// Oracle B.  Same domain as oracle A.  After the scan, a deterministic
/// 100-sample randomized audit re-checks the clipping argument: random
/// monomials with exponents up to one past the largest threshold must never
/// beat the computed minimum (a violation throws std::logic_error).
CmVerdict is_cm_depth(const MonomialIdeal& I, const FieldConfig& field = FieldConfig::q(),
                      const Budgets& budgets = Budgets{}, std::int64_t dim_hint = -1);

/// depth of R/J for a squarefree monomial ideal J (top-down skeleton scan
/// of the Stanley–Reisner complex).  Proper ideals only; the zero ideal
/// gives n.
std::int64_t depth_squarefree(const MonomialIdeal& J, const FieldConfig& field,
                              CellBudget& budget);

}  // namespace weid
