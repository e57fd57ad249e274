#pragma once

// Exact monomial and monomial-ideal arithmetic: minimal generating sets,
// membership, intersection, product/power, colon by a monomial, radical,
// restriction to a variable subset, and localization at a variable subset.
//
// Every MonomialIdeal is kept in canonical form: generators are a minimal
// generating set (no generator divides another) sorted in the global
// lexicographic order on exponent vectors.  Equality of ideals is therefore
// equality of representations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weid/ring.hpp"

namespace weid {

/// A monomial in a fixed ambient ring: dense exponent vector plus a cached
/// support mask.  Immutable value type.  The identity monomial (all exponents
/// zero) represents 1.
class Monomial {
 public:
  /// The monomial 1 in an ambient with nvars variables.
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exp>(nvars, 0)); }

  /// Build from a dense exponent vector.
  explicit Monomial(std::vector<Exp> exps);

  /// Build from sparse (index, exponent) pairs; absent indices are zero.
  static Monomial from_pairs(std::size_t nvars,
                             const std::vector<std::pair<std::size_t, Exp>>& pairs);

  std::size_t nvars() const { return e_.size(); }
  Exp exp(std::size_t i) const { return e_[i]; }
  const VarMask& support() const { return supp_; }
  bool is_one() const { return supp_.empty(); }

  /// Total degree (checked sum of exponents).
  Exp degree() const;

  bool divides(const Monomial& f) const;

  Monomial times(const Monomial& f) const;
  Monomial lcm(const Monomial& f) const;
  Monomial gcd(const Monomial& f) const;

  /// this / gcd(this, f): per-variable max(0, e_i - f_i).  The colon kernel.
  Monomial quotient_by(const Monomial& f) const;

  /// Exponents clipped to 1: the squarefree part.
  Monomial squarefree() const;

  /// Per-variable power (checked): this^k.
  Monomial pow(Exp k) const;

  /// Drop exponents of variables outside keep (used by localization).
  Monomial zero_outside(const VarMask& keep) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  /// Global lexicographic order on exponent vectors (variable 0 weighs most).
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

  std::size_t hash() const;

  /// Human-readable form, e.g. "a^2*x" or "1"; names from the ring.
  std::string str(const Ring& ring) const;

 private:
  std::vector<Exp> e_;
  VarMask supp_;
};

/// A monomial ideal in canonical minimal form.  The zero ideal has no
/// generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  /// Minimalize an arbitrary generating set: drop every generator strictly
  /// divisible by another, deduplicate, sort.  A generator equal to 1 makes
  /// the unit ideal.  Result is independent of input order.
  static MonomialIdeal make(RingPtr ring, std::vector<Monomial> gens);

  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(RingPtr ring) {
    auto one = Monomial::one(ring->size());
    return MonomialIdeal(std::move(ring), {std::move(one)});
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  /// True when every generator is squarefree.
  bool is_squarefree() const;

  /// Membership of a monomial: some generator divides f.  Zero ideal contains
  /// no monomial; unit ideal contains every monomial.
  bool contains(const Monomial& f) const;

  /// Ideal containment: every generator of other lies in *this.
  bool contains(const MonomialIdeal& other) const;

  /// Union of supports of all generators.
  VarMask support() const;

  /// Per-variable maximum exponent over the generators (the colon/candidate
  /// cap vector).  All zeros for the zero and unit ideals.
  std::vector<Exp> max_exponents() const;

  bool operator==(const MonomialIdeal& o) const {
    return same_ring(ring_, o.ring_) && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  std::size_t hash() const;

  /// Human-readable generator list, e.g. "(a*b, a*x, b*y)".
  std::string str() const;

 private:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  RingPtr ring_;
  std::vector<Monomial> gens_;  // minimal, sorted, canonical
};

/// I ∩ J via pairwise lcms, minimalized.  intersect(zero, J) = zero;
/// intersect(unit, J) = J.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// Product ideal I·J via pairwise products, minimalized.
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// I^n by iterated product with intermediate minimalization.  power(I, 0) is
/// the unit ideal by convention (documented); power(zero, n>0) = zero.
MonomialIdeal power(const MonomialIdeal& I, std::uint64_t n);

/// Colon ideal I : f = (g / gcd(g, f) : g in G(I)), minimalized.
/// membership(I, f) iff colon(I, f) is the unit ideal.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f);

/// Radical: squarefree parts of the generators, minimalized.
MonomialIdeal radical(const MonomialIdeal& I);

/// Restriction I|_W: keep exactly the generators whose support lies inside W.
/// Same ambient ring.
MonomialIdeal restrict_to(const MonomialIdeal& I, const VarMask& W);

/// Localization at the variable complement: treat the variables in W as
/// units, i.e. zero their exponents in every generator and minimalize.
/// Equals the saturation I : (prod W)^inf.
MonomialIdeal localize(const MonomialIdeal& I, const VarMask& W);

/// Generators-sorted intersection of many ideals; unit for an empty list.
MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& parts, const RingPtr& ring);

}  // namespace weid
