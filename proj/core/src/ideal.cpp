#include "weid/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace weid {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exp> exps) : e_(std::move(exps)) {
  if (e_.size() > kMaxVariables)
    throw ResourceLimitError("monomial ambient exceeds the variable cap");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i]) supp_.set(i);
}

Monomial Monomial::from_pairs(std::size_t nvars,
                              const std::vector<std::pair<std::size_t, Exp>>& pairs) {
  std::vector<Exp> e(nvars, 0);
  for (const auto& [i, x] : pairs) {
    if (i >= nvars) throw DomainError("variable index out of range");
    e[i] = checked_add(e[i], x);
  }
  return Monomial(std::move(e));
}

Exp Monomial::degree() const {
  Exp d = 0;
  for (auto x : e_) d = checked_add(d, x);
  return d;
}

bool Monomial::divides(const Monomial& f) const {
  if (!supp_.subset_of(f.supp_)) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > f.e_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& f) const {
  std::vector<Exp> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = checked_add(e_[i], f.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& f) const {
  std::vector<Exp> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = std::max(e_[i], f.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& f) const {
  std::vector<Exp> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = std::min(e_[i], f.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_by(const Monomial& f) const {
  std::vector<Exp> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] > f.e_[i] ? e_[i] - f.e_[i] : 0;
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree() const {
  std::vector<Exp> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] ? 1 : 0;
  return Monomial(std::move(e));
}

Monomial Monomial::pow(Exp k) const {
  std::vector<Exp> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = checked_mul(e_[i], k);
  return Monomial(std::move(e));
}

Monomial Monomial::zero_outside(const VarMask& keep) const {
  std::vector<Exp> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = keep.test(i) ? e_[i] : 0;
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : e_) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
  return h;
}

std::string Monomial::str(const Ring& ring) const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!e_[i]) continue;
    if (!first) os << "*";
    first = false;
    os << ring.name(i);
    if (e_[i] > 1) os << "^" << e_[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal MonomialIdeal::make(RingPtr ring, std::vector<Monomial> gens) {
  if (!ring) throw DomainError("null ring");
  for (const auto& g : gens)
    if (g.nvars() != ring->size())
      throw AmbientMismatchError("generator ambient differs from ring");

  // Unit short-circuit: 1 generates everything.
  for (const auto& g : gens)
    if (g.is_one()) return unit(std::move(ring));

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Divisibility filter with support-mask prefilter.  Sorted order means a
  // divisor can appear before or after its multiple, so check both ways.
  std::vector<Monomial> minimal;
  minimal.reserve(gens.size());
  std::vector<bool> dead(gens.size(), false);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (dead[i]) continue;
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (dead[j]) continue;
      if (gens[i].divides(gens[j])) dead[j] = true;
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!dead[i]) minimal.push_back(std::move(gens[i]));
  return MonomialIdeal(std::move(ring), std::move(minimal));
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < g.nvars(); ++i)
      if (g.exp(i) > 1) return false;
  return true;
}

bool MonomialIdeal::contains(const Monomial& f) const {
  for (const auto& g : gens_)
    if (g.divides(f)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_, "contains");
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

VarMask MonomialIdeal::support() const {
  VarMask m;
  for (const auto& g : gens_) m |= g.support();
  return m;
}

std::vector<Exp> MonomialIdeal::max_exponents() const {
  std::vector<Exp> caps(nvars(), 0);
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = std::max(caps[i], g.exp(i));
  return caps;
}

std::size_t MonomialIdeal::hash() const {
  std::size_t h = 14695981039346656037ULL;
  for (const auto& g : gens_) h = h * 1000003ULL ^ g.hash();
  return h;
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].str(*ring_);
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Operations

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring(), "intersect");
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ring());
  std::vector<Monomial> out;
  out.reserve(I.num_gens() * J.num_gens());
  for (const auto& g : I.gens())
    for (const auto& h : J.gens()) out.push_back(g.lcm(h));
  return MonomialIdeal::make(I.ring(), std::move(out));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring(), "product");
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ring());
  std::vector<Monomial> out;
  out.reserve(I.num_gens() * J.num_gens());
  for (const auto& g : I.gens())
    for (const auto& h : J.gens()) out.push_back(g.times(h));
  return MonomialIdeal::make(I.ring(), std::move(out));
}

MonomialIdeal power(const MonomialIdeal& I, std::uint64_t n) {
  // power(I, 0) = unit ideal by convention: the empty product.
  if (n == 0) return MonomialIdeal::unit(I.ring());
  MonomialIdeal acc = I;
  for (std::uint64_t k = 1; k < n; ++k) acc = product(acc, I);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f) {
  if (f.nvars() != I.nvars()) throw AmbientMismatchError("colon: monomial ambient differs");
  std::vector<Monomial> out;
  out.reserve(I.num_gens());
  for (const auto& g : I.gens()) out.push_back(g.quotient_by(f));
  return MonomialIdeal::make(I.ring(), std::move(out));
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> out;
  out.reserve(I.num_gens());
  for (const auto& g : I.gens()) out.push_back(g.squarefree());
  return MonomialIdeal::make(I.ring(), std::move(out));
}

MonomialIdeal restrict_to(const MonomialIdeal& I, const VarMask& W) {
  std::vector<Monomial> out;
  for (const auto& g : I.gens())
    if (g.support().subset_of(W)) out.push_back(g);
  return MonomialIdeal::make(I.ring(), std::move(out));
}

MonomialIdeal localize(const MonomialIdeal& I, const VarMask& W) {
  VarMask keep = I.ring()->full_mask().minus(W);
  std::vector<Monomial> out;
  out.reserve(I.num_gens());
  for (const auto& g : I.gens()) out.push_back(g.zero_outside(keep));
  return MonomialIdeal::make(I.ring(), std::move(out));
}

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& parts, const RingPtr& ring) {
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (const auto& p : parts) acc = intersect(acc, p);
  return acc;
}

}  // namespace weid
