#pragma once

// Primary decomposition of monomial ideals and everything downstream of it:
// associated primes, unmixedness, height/dimension, and symbolic powers.
//
// Route: recursive generator splitting into irreducible components
// (deterministic split rule), containment-pruned to an irredundant set —
// for monomial irreducibles, J1 ∩ J2 ⊆ Q forces J1 ⊆ Q or J2 ⊆ Q, so
// pairwise containment pruning is complete — then grouped by radical and
// intersected per group.

#include <cstdint>
#include <vector>

#include "weid/ideal.hpp"

namespace weid {

/// One primary component: its ideal and its radical prime (as a variable
/// mask, equal to the common support of the component's generators).
struct PrimaryComponent {
  MonomialIdeal ideal;
  VarMask prime;
};

/// An irredundant primary decomposition.  The intersection of the components
/// is verified to equal the decomposed ideal on construction.
struct Decomposition {
  std::vector<PrimaryComponent> components;
  bool unmixed = false;
  std::size_t height = 0;
};

/// Irredundant irreducible decomposition.  Each component is encoded by its
/// exponent vector e, denoting the ideal (x^{e_x} : e_x > 0).
/// Pre: I nonzero and proper.
std::vector<Monomial> irreducible_decomposition(const MonomialIdeal& I);

/// Irredundant primary decomposition (irreducibles grouped by radical).
Decomposition primary_decomposition(const MonomialIdeal& I);

/// Radicals of the components of the irredundant primary decomposition,
/// sorted by (cardinality, mask).  Pre: I nonzero and proper.
std::vector<VarMask> associated_primes(const MonomialIdeal& I);

/// Minimal primes: associated primes of the radical.
std::vector<VarMask> minimal_primes(const MonomialIdeal& I);

/// All associated primes have equal cardinality.
bool is_unmixed(const MonomialIdeal& I);

/// Smallest cardinality of an associated prime of sqrt(I).
std::size_t height(const MonomialIdeal& I);

/// dim R/I = (number of ambient variables) - height(I).
std::size_t dim_quotient(const MonomialIdeal& I);

/// n-th symbolic power: intersection over the minimal primes p of
/// power(localize(I, complement of p), n).
MonomialIdeal symbolic_power(const MonomialIdeal& I, std::uint64_t n);

}  // namespace weid
