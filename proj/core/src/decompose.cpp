#include "weid/decompose.hpp"

#include <algorithm>
#include <unordered_map>

namespace weid {

namespace {

void require_decomposable(const MonomialIdeal& I, const char* op) {
  if (I.is_zero()) throw DomainError(std::string(op) + ": zero ideal");
  if (I.is_unit()) throw DomainError(std::string(op) + ": unit ideal");
}

struct IdealHash {
  std::size_t operator()(const MonomialIdeal& I) const { return I.hash(); }
};
struct IdealEq {
  bool operator()(const MonomialIdeal& a, const MonomialIdeal& b) const { return a == b; }
};
using SplitCache = std::unordered_map<MonomialIdeal, std::vector<Monomial>, IdealHash, IdealEq>;

/// Irreducible ideal containment: (x^{b_x}) subseteq (x^{a_x}) iff every
/// variable of the smaller's support appears in the larger with a smaller or
/// equal exponent.  More variables and lower exponents both make the
/// pure-power ideal *larger*: ideal(big) ⊇ ideal(small) iff
/// supp(small) ⊆ supp(big) and big_x <= small_x on supp(small).
bool irreducible_contains(const Monomial& big, const Monomial& small) {
  // ideal(big) ⊇ ideal(small)?
  if (!small.support().subset_of(big.support())) return false;
  for (std::size_t i = 0; i < small.nvars(); ++i)
    if (small.exp(i) && big.exp(i) > small.exp(i)) return false;
  return true;
}

const std::vector<Monomial>& split_rec(const MonomialIdeal& I, SplitCache& cache) {
  auto it = cache.find(I);
  if (it != cache.end()) return it->second;

  // Deterministic split rule: the first generator (in the canonical ideal
  // order) with support of size >= 2, split off its lowest-index variable.
  const Monomial* mixed = nullptr;
  for (const auto& g : I.gens())
    if (g.support().count() >= 2) {
      mixed = &g;
      break;
    }

  std::vector<Monomial> comps;
  if (!mixed) {
    // All generators are pure powers of distinct variables: one irreducible.
    std::vector<Exp> e(I.nvars(), 0);
    for (const auto& g : I.gens()) {
      std::size_t v = g.support().lowest();
      e[v] = g.exp(v);
    }
    comps.push_back(Monomial(std::move(e)));
  } else {
    std::size_t x = mixed->support().lowest();
    std::vector<Exp> pure(I.nvars(), 0);
    pure[x] = mixed->exp(x);
    Monomial xpart(std::move(pure));
    Monomial rest = mixed->quotient_by(xpart);  // m / x^a, coprime to x^a

    std::vector<Monomial> g1, g2;
    for (const auto& g : I.gens())
      if (&g != mixed) {
        g1.push_back(g);
        g2.push_back(g);
      }
    g1.push_back(std::move(xpart));
    g2.push_back(std::move(rest));
    MonomialIdeal I1 = MonomialIdeal::make(I.ring(), std::move(g1));
    MonomialIdeal I2 = MonomialIdeal::make(I.ring(), std::move(g2));

    // I = I1 ∩ I2 because the split parts are coprime.
    comps = split_rec(I1, cache);
    const auto& c2 = split_rec(I2, cache);
    comps.insert(comps.end(), c2.begin(), c2.end());
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  }
  return cache.emplace(I, std::move(comps)).first->second;
}

std::vector<Monomial> prune_irredundant(std::vector<Monomial> comps) {
  // Drop any component whose ideal contains another's: complete for
  // irreducibles (see header).
  std::vector<bool> dead(comps.size(), false);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (i == j || dead[i] || dead[j]) continue;
      if (irreducible_contains(comps[i], comps[j])) {
        dead[i] = true;
        break;
      }
    }
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!dead[i]) out.push_back(std::move(comps[i]));
  return out;
}

MonomialIdeal irreducible_as_ideal(const RingPtr& ring, const Monomial& e) {
  std::vector<Monomial> gens;
  e.support().for_each([&](std::size_t i) {
    std::vector<Exp> v(ring->size(), 0);
    v[i] = e.exp(i);
    gens.push_back(Monomial(std::move(v)));
  });
  return MonomialIdeal::make(ring, std::move(gens));
}

}  // namespace

std::vector<Monomial> irreducible_decomposition(const MonomialIdeal& I) {
  require_decomposable(I, "irreducible decomposition");
  SplitCache cache;
  return prune_irredundant(split_rec(I, cache));
}

Decomposition primary_decomposition(const MonomialIdeal& I) {
  auto irr = irreducible_decomposition(I);

  // Group by radical (= support mask), preserving the canonical order of
  // first appearance after sorting by (cardinality, mask).
  std::vector<VarMask> primes;
  for (const auto& e : irr) primes.push_back(e.support());
  std::sort(primes.begin(), primes.end(), [](const VarMask& a, const VarMask& b) {
    auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  Decomposition dec;
  for (const auto& p : primes) {
    MonomialIdeal q = MonomialIdeal::unit(I.ring());
    for (const auto& e : irr)
      if (e.support() == p) q = intersect(q, irreducible_as_ideal(I.ring(), e));
    dec.components.push_back({std::move(q), p});
  }

  // Invariants checked on construction: reconstruction and mixedness data.
  MonomialIdeal back = MonomialIdeal::unit(I.ring());
  for (const auto& c : dec.components) back = intersect(back, c.ideal);
  if (back != I)
    throw std::logic_error("primary decomposition failed to reconstruct its ideal");

  dec.height = kMaxVariables;
  dec.unmixed = true;
  for (const auto& c : dec.components) dec.height = std::min(dec.height, c.prime.count());
  for (const auto& c : dec.components)
    if (c.prime.count() != dec.components.front().prime.count()) dec.unmixed = false;
  // height is min over associated primes of the radical == min over all
  // associated primes (every prime contains a minimal one of smaller support).
  return dec;
}

std::vector<VarMask> associated_primes(const MonomialIdeal& I) {
  auto irr = irreducible_decomposition(I);
  std::vector<VarMask> primes;
  for (const auto& e : irr) primes.push_back(e.support());
  std::sort(primes.begin(), primes.end(), [](const VarMask& a, const VarMask& b) {
    auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<VarMask> minimal_primes(const MonomialIdeal& I) {
  return associated_primes(radical(I));
}

bool is_unmixed(const MonomialIdeal& I) {
  auto primes = associated_primes(I);
  for (const auto& p : primes)
    if (p.count() != primes.front().count()) return false;
  return true;
}

std::size_t height(const MonomialIdeal& I) {
  auto primes = associated_primes(radical(I));
  std::size_t h = kMaxVariables;
  for (const auto& p : primes) h = std::min(h, p.count());
  return h;
}

std::size_t dim_quotient(const MonomialIdeal& I) { return I.nvars() - height(I); }

MonomialIdeal symbolic_power(const MonomialIdeal& I, std::uint64_t n) {
  require_decomposable(I, "symbolic power");
  if (n == 0) return MonomialIdeal::unit(I.ring());
  auto mins = minimal_primes(I);
  MonomialIdeal acc = MonomialIdeal::unit(I.ring());
  for (const auto& p : mins) {
    VarMask outside = I.ring()->full_mask().minus(p);
    acc = intersect(acc, power(localize(I, outside), n));
  }
  return acc;
}

}  // namespace weid
