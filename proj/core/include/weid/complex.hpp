#pragma once

// Finite simplicial complexes presented by their minimal nonfaces (the
// Stanley–Reisner view), exact reduced homology over Q or F_p, and the
// Cohen–Macaulay test via vanishing of link homology.
//
// Homology ranks are exact by one of two interchangeable routes:
//  * direct: enumerate faces, boundary matrices, fraction-free ranks;
//  * dual: combinatorial Alexander duality composed with the nerve lemma.
//    The Alexander dual of a complex with minimal nonfaces N_1..N_s is
//    covered by the s simplices on the complements V \ N_i; all their
//    intersections are simplices (hence empty or contractible), so the dual
//    is homotopy-equivalent to the nerve { S ⊆ [s] : ∪_{i∈S} N_i ≠ V }, and
//    H~_i(Δ; K) ≅ H~_{n-3-i}(nerve; K).
// The dual route turns "few large nonfaces on many vertices" (exactly what
// polarization produces) from hopeless into trivial.  Both routes are exact
// and are cross-checked in the tests.

#include <cstdint>
#include <vector>

#include "weid/ideal.hpp"

namespace weid {

/// Coefficient field for homology ranks: the rationals (default, exact
/// fraction-free elimination) or a prime field F_p.
struct FieldConfig {
  bool rationals = true;
  std::uint64_t p = 0;

  static FieldConfig q() { return {}; }
  static FieldConfig fp(std::uint64_t prime);
};

/// Shared enumeration budget.  Every face (or dual nerve cell) materialized
/// during homology or CM checking draws from it; exhaustion throws
/// ResourceLimitError.  Defaults to 2^24 cells.
struct CellBudget {
  std::uint64_t remaining = std::uint64_t{1} << 24;
  void charge(std::uint64_t k);
};

/// A simplicial complex on vertices 0..n-1 given by its minimal nonfaces
/// (pairwise incomparable, nonempty, sorted).  The complex with no nonfaces
/// is the full simplex; n == 0 gives the complex {∅}.
struct SimplicialComplex {
  std::size_t n = 0;
  std::vector<VarMask> nonfaces;

  SimplicialComplex() = default;
  SimplicialComplex(std::size_t nverts, std::vector<VarMask> minimal_nonfaces);

  /// Stanley–Reisner complex of a squarefree monomial ideal: vertices are
  /// the ambient variables, minimal nonfaces the generator supports.
  /// Errors: non-squarefree or unit ideal -> domain error.
  static SimplicialComplex from_squarefree(const MonomialIdeal& J);

  bool is_face(const VarMask& F) const;

  /// Largest face cardinality: n minus an exact minimum hitting set of the
  /// nonfaces (a set is a face iff its complement hits every nonface).
  std::size_t max_face_size() const;

  /// dim = max_face_size() - 1 (so the complex {∅} has dimension -1).
  std::int64_t dim() const { return static_cast<std::int64_t>(max_face_size()) - 1; }

  /// All faces grouped by cardinality (index = number of vertices; the empty
  /// face sits in group 0).  Budgeted.
  std::vector<std::vector<VarMask>> faces_by_size(CellBudget& budget) const;

  /// Maximal faces, ascending by mask.  Budgeted via faces_by_size.
  std::vector<VarMask> facets(CellBudget& budget) const;

  /// The i-skeleton: faces of dimension <= i.
  SimplicialComplex skeleton(std::int64_t i) const;

  /// Link of a face: universe V \ F relabeled densely in increasing order,
  /// nonfaces minimalized from { N \ F }.  The caller guarantees F is a face.
  SimplicialComplex link(const VarMask& F) const;
};

/// Reduced homology ranks over the field: result[i] = rank of H~_{i-1}, for
/// i = 0 .. dim+1 (index 0 is H~_{-1}).  Exact; route chosen automatically.
std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& C,
                                                 const FieldConfig& field, CellBudget& budget);

/// Cohen–Macaulayness over the field: for every face F (including the empty
/// one), H~_i(link F) = 0 for all i < dim(link F).  Implemented as the
/// equivalent vertex-link recursion with memoization, cone-point and
/// ghost-vertex reduction.
bool is_cm_complex(const SimplicialComplex& C, const FieldConfig& field, CellBudget& budget);

/// depth of the Stanley–Reisner ring of C: 1 + max{ i : i-skeleton is CM },
/// scanning from the top; the (-1)-skeleton {∅} is CM by convention, so the
/// result is always >= 0.
std::int64_t complex_depth(const SimplicialComplex& C, const FieldConfig& field,
                           CellBudget& budget);

/// Exact rank of a dense integer matrix over the field (fraction-free
/// Bareiss over Q with big-integer escalation; modular elimination over F_p).
/// Exposed for tests.
std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& M,
                        const FieldConfig& field);

/// Exact minimum hitting set cardinality of a family of nonempty sets.
/// Exposed for tests and shared with the CM engine's dimension bookkeeping.
std::size_t min_hitting_set_size(const std::vector<VarMask>& sets);

}  // namespace weid
