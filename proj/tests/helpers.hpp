#pragma once

// Shared builders for the test suites: named-variable monomials, ideals
// parsed from compact "a^2*x" specs, masks by name, and the seeded random
// ideal generator used by the property suites and the acceptance run.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weid/ideal.hpp"
#include "weid/ring.hpp"

namespace weid::testing {

/// Parse "a^2*x1" (factors joined by '*', optional ^exponent) into a
/// monomial; "1" is the identity.
inline Monomial mono(const RingPtr& R, const std::string& spec) {
  std::vector<Exp> e(R->size(), 0);
  if (spec != "1") {
    std::size_t pos = 0;
    while (pos < spec.size()) {
      std::size_t star = spec.find('*', pos);
      if (star == std::string::npos) star = spec.size();
      std::string factor = spec.substr(pos, star - pos);
      std::size_t caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      Exp k = 1;
      if (caret != std::string::npos) k = std::stoull(factor.substr(caret + 1));
      e[R->index_of(name)] += k;
      pos = star + 1;
    }
  }
  return Monomial(std::move(e));
}

/// Ideal from a list of monomial specs (minimalized by make()).
inline MonomialIdeal ideal(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  ms.reserve(gens.size());
  for (const auto& g : gens) ms.push_back(mono(R, g));
  return MonomialIdeal::make(R, std::move(ms));
}

/// Mask of the named variables.
inline VarMask mask(const RingPtr& R, const std::vector<std::string>& names) {
  VarMask m;
  for (const auto& n : names) m.set(R->index_of(n));
  return m;
}

/// A proper nonzero random ideal: 1..max_gens generators, each variable
/// present with probability 1/2 at exponent 1..max_exp (all-zero draws are
/// retried).  Deterministic for a fixed generator state.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, const RingPtr& R, std::size_t max_gens,
                                  Exp max_exp) {
  std::uniform_int_distribution<std::size_t> ngen(1, max_gens);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<Exp> ex(1, max_exp);
  const std::size_t g = ngen(rng);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<Exp> e(R->size(), 0);
    bool nonzero = false;
    do {
      for (std::size_t v = 0; v < R->size(); ++v) {
        e[v] = coin(rng) ? ex(rng) : 0;
        nonzero |= e[v] != 0;
      }
    } while (!nonzero);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::make(R, std::move(gens));
}

}  // namespace weid::testing
