#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "weid/decompose.hpp"
#include "weid/ideal.hpp"
#include "weid/ring.hpp"

using namespace weid;
using weid::testing::ideal;
using weid::testing::mask;
using weid::testing::mono;
using weid::testing::random_ideal;

namespace {

const RingPtr R4 = make_ring({"a", "b", "x", "y"});

/// Brute-force associated primes of a monomial ideal: a variable prime P_S
/// is associated iff P_S = (I : f) for some monomial f, and such a witness
/// exists with exponents bounded by the generator maxima.  Completely
/// independent of the splitting algorithm under test.
std::set<VarMask> brute_ass(const MonomialIdeal& I) {
  std::set<VarMask> out;
  const std::size_t n = I.nvars();
  const auto maxe = I.max_exponents();
  std::vector<Exp> f(n, 0);
  for (;;) {
    auto C = colon(I, Monomial(f));
    if (!C.is_unit()) {
      bool varprime = true;
      VarMask s;
      for (const auto& g : C.gens()) {
        if (g.degree() != 1) varprime = false;
        s |= g.support();
      }
      if (varprime) out.insert(s);
    }
    std::size_t v = 0;
    while (v < n && f[v] == maxe[v]) f[v++] = 0;
    if (v == n) break;
    ++f[v];
  }
  return out;
}

std::set<VarMask> as_set(const std::vector<VarMask>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("irreducible decomposition: frozen values") {
  auto I = ideal(R4, {"a*b", "a^2*x^2", "b^2*y^2"});
  auto irr = irreducible_decomposition(I);
  std::vector<Monomial> expected = {mono(R4, "b*x^2"), mono(R4, "a*y^2"), mono(R4, "a*b^2"),
                                    mono(R4, "a^2*b")};
  std::sort(irr.begin(), irr.end());
  std::sort(expected.begin(), expected.end());
  CHECK(irr == expected);

  // Reconstruction: the intersection of the irreducible components is I.
  std::vector<MonomialIdeal> parts;
  for (const auto& e : irr) {
    std::vector<Monomial> gens;
    e.support().for_each([&](std::size_t v) {
      gens.push_back(Monomial::from_pairs(4, {{v, e.exp(v)}}));
    });
    parts.push_back(MonomialIdeal::make(R4, std::move(gens)));
  }
  CHECK(intersect_all(parts, R4) == I);

  // The classic embedded-prime example (a) ∩ (a^2, b).
  auto J = ideal(R4, {"a^2", "a*b"});
  auto irrJ = irreducible_decomposition(J);
  std::sort(irrJ.begin(), irrJ.end());
  CHECK(irrJ == std::vector<Monomial>{mono(R4, "a"), mono(R4, "a^2*b")});
}

TEST_CASE("primary decomposition: frozen values") {
  auto I = ideal(R4, {"a*b", "a^2*x^2", "b^2*y^2"});
  auto dec = primary_decomposition(I);
  REQUIRE(dec.components.size() == 3);
  CHECK(dec.components[0].prime == mask(R4, {"a", "b"}));
  CHECK(dec.components[0].ideal == ideal(R4, {"a^2", "a*b", "b^2"}));
  CHECK(dec.components[1].prime == mask(R4, {"b", "x"}));
  CHECK(dec.components[1].ideal == ideal(R4, {"b", "x^2"}));
  CHECK(dec.components[2].prime == mask(R4, {"a", "y"}));
  CHECK(dec.components[2].ideal == ideal(R4, {"a", "y^2"}));
  CHECK(dec.unmixed);
  CHECK(dec.height == 2);

  // Determinism: the exact same output twice.
  auto dec2 = primary_decomposition(I);
  REQUIRE(dec2.components.size() == dec.components.size());
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    CHECK(dec2.components[i].prime == dec.components[i].prime);
    CHECK(dec2.components[i].ideal == dec.components[i].ideal);
  }
}

TEST_CASE("associated and minimal primes: frozen values") {
  // Edge ideal of a path: three minimal covers, unmixed of height 2.
  auto I = ideal(R4, {"a*b", "a*x", "b*y"});
  auto ass = associated_primes(I);
  CHECK(as_set(ass) ==
        std::set<VarMask>{mask(R4, {"a", "b"}), mask(R4, {"b", "x"}), mask(R4, {"a", "y"})});
  CHECK(minimal_primes(I) == ass);
  CHECK(is_unmixed(I));
  CHECK(height(I) == 2);
  CHECK(dim_quotient(I) == 2);

  // Star K_{1,3}: covers {hub} and {all leaves}; mixed.
  const RingPtr S = make_ring({"a", "b", "c", "d"});
  auto star = ideal(S, {"a*b", "a*c", "a*d"});
  CHECK(as_set(associated_primes(star)) ==
        std::set<VarMask>{mask(S, {"a"}), mask(S, {"b", "c", "d"})});
  CHECK(!is_unmixed(star));
  CHECK(height(star) == 1);
  CHECK(dim_quotient(star) == 3);

  // Embedded prime: Ass strictly larger than Min.
  auto J = ideal(R4, {"a^2", "a*b"});
  CHECK(as_set(associated_primes(J)) ==
        std::set<VarMask>{mask(R4, {"a"}), mask(R4, {"a", "b"})});
  CHECK(as_set(minimal_primes(J)) == std::set<VarMask>{mask(R4, {"a"})});
  CHECK(!is_unmixed(J));
  CHECK(height(J) == 1);
}

TEST_CASE("symbolic powers") {
  // Forest edge ideals: symbolic equals ordinary.
  auto I = ideal(R4, {"a*b", "a*x", "b*y"});
  for (std::uint64_t n : {1, 2, 3}) CHECK(symbolic_power(I, n) == power(I, n));

  // Weighted path whose pendant weights dominate twice the middle weight.
  auto W = ideal(R4, {"a*b", "a^2*x^2", "b^2*y^2"});
  for (std::uint64_t n : {1, 2, 3}) CHECK(symbolic_power(W, n) == power(W, n));

  // Triangle: a*b*c lies in every squared cover but not in I^2.
  const RingPtr T = make_ring({"a", "b", "c"});
  auto tri = ideal(T, {"a*b", "a*c", "b*c"});
  auto sym2 = symbolic_power(tri, 2);
  CHECK(sym2 != power(tri, 2));
  CHECK(sym2.contains(power(tri, 2)));
  CHECK(sym2.contains(mono(T, "a*b*c")));
  CHECK(!power(tri, 2).contains(mono(T, "a*b*c")));

  // The first symbolic power drops embedded components.
  auto J = ideal(R4, {"a^2", "a*b"});
  CHECK(symbolic_power(J, 1) == ideal(R4, {"a"}));
  CHECK(symbolic_power(J, 0).is_unit());
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(R4)), DomainError);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(R4)), DomainError);
  CHECK_THROWS_AS(primary_decomposition(MonomialIdeal::unit(R4)), DomainError);
  CHECK_THROWS_AS(symbolic_power(MonomialIdeal::zero(R4), 2), DomainError);
}

TEST_CASE("brute-force cross-check of associated primes") {
  // Frozen instances first.
  for (const auto& I :
       {ideal(R4, {"a*b", "a*x", "b*y"}), ideal(R4, {"a*b", "a^2*x^2", "b^2*y^2"}),
        ideal(R4, {"a^2", "a*b"}), ideal(R4, {"a^2*b", "b^3*x", "x^2*y"})}) {
    CHECK(as_set(associated_primes(I)) == brute_ass(I));
  }

  // Seeded random ideals: the splitting route must match the colon route.
  std::mt19937_64 rng(424243);
  const RingPtr R = make_ring({"a", "b", "c", "d"});
  for (int iter = 0; iter < 60; ++iter) {
    auto I = random_ideal(rng, R, 4, 3);
    if (I.is_unit()) continue;
    CAPTURE(I.str());
    CHECK(as_set(associated_primes(I)) == brute_ass(I));

    // Reconstruction from the primary components.
    auto dec = primary_decomposition(I);
    std::vector<MonomialIdeal> parts;
    for (const auto& c : dec.components) parts.push_back(c.ideal);
    CHECK(intersect_all(parts, R) == I);
    CHECK(dec.unmixed == is_unmixed(I));

    // Height = smallest minimal-prime size; dimension complements it.
    std::size_t h = kMaxVariables;
    for (const auto& p : minimal_primes(I)) h = std::min(h, p.count());
    CHECK(height(I) == h);
    CHECK(dim_quotient(I) == R->size() - h);
  }
}

TEST_CASE("symbolic power via localization agrees with per-prime colon powers") {
  // Independent route: I^(n) = ∩_p ( I^n : (prod of vars outside p)^∞ ),
  // computed here with explicit saturation by repeated colon.
  std::mt19937_64 rng(99991);
  const RingPtr R = make_ring({"a", "b", "c", "d"});
  auto saturate = [&](MonomialIdeal J, const Monomial& f) {
    for (;;) {
      auto next = colon(J, f);
      if (next == J) return J;
      J = std::move(next);
    }
  };
  for (int iter = 0; iter < 25; ++iter) {
    auto I = random_ideal(rng, R, 3, 2);
    if (I.is_unit()) continue;
    for (std::uint64_t n : {2, 3}) {
      auto direct = symbolic_power(I, n);
      auto In = power(I, n);
      MonomialIdeal acc = MonomialIdeal::unit(R);
      for (const auto& p : minimal_primes(I)) {
        VarMask outside = R->full_mask().minus(p);
        std::vector<Exp> e(R->size(), 0);
        outside.for_each([&](std::size_t v) { e[v] = 1; });
        acc = intersect(acc, saturate(In, Monomial(e)));
      }
      CAPTURE(I.str());
      CHECK(direct == acc);
    }
  }
}
