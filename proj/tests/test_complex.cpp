#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "weid/cm.hpp"
#include "weid/complex.hpp"
#include "weid/ideal.hpp"
#include "weid/ring.hpp"

using namespace weid;
using weid::testing::ideal;

namespace {

CellBudget fresh() { return CellBudget{}; }

SimplicialComplex cx(std::size_t n, std::vector<std::vector<std::size_t>> nonfaces) {
  std::vector<VarMask> nf;
  for (const auto& N : nonfaces) {
    VarMask m;
    for (auto v : N) m.set(v);
    nf.push_back(m);
  }
  return SimplicialComplex(n, std::move(nf));
}

/// Independent homology: enumerate faces by brute-force is_face over all
/// subsets, build boundary matrices, take ranks.  No shared enumeration code
/// with reduced_homology_ranks.
std::vector<std::int64_t> brute_homology(const SimplicialComplex& C, const FieldConfig& field) {
  REQUIRE(C.n <= 16);
  std::vector<std::vector<VarMask>> groups(C.n + 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << C.n); ++bits) {
    VarMask F;
    for (std::size_t v = 0; v < C.n; ++v)
      if ((bits >> v) & 1) F.set(v);
    if (C.is_face(F)) groups[F.count()].push_back(F);
  }
  while (groups.size() > 1 && groups.back().empty()) groups.pop_back();
  for (auto& g : groups) std::sort(g.begin(), g.end());
  const std::size_t K = groups.size() - 1;
  std::vector<std::size_t> rank_up(K + 2, 0);
  for (std::size_t s = 1; s <= K; ++s) {
    const auto& rows = groups[s - 1];
    const auto& cols = groups[s];
    if (rows.empty() || cols.empty()) continue;
    std::vector<std::vector<std::int64_t>> M(rows.size(),
                                             std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int sign = 1;
      cols[j].for_each([&](std::size_t v) {
        VarMask sub = cols[j];
        sub.reset(v);
        auto it = std::lower_bound(rows.begin(), rows.end(), sub);
        M[static_cast<std::size_t>(it - rows.begin())][j] = sign;
        sign = -sign;
      });
    }
    rank_up[s] = matrix_rank(M, field);
  }
  std::vector<std::int64_t> betti(K + 1, 0);
  for (std::size_t s = 0; s <= K; ++s)
    betti[s] = static_cast<std::int64_t>(groups[s].size()) -
               static_cast<std::int64_t>(rank_up[s]) - static_cast<std::int64_t>(rank_up[s + 1]);
  return betti;
}

/// The ten minimal nonfaces of the six-vertex triangulation of the real
/// projective plane (complete 1-skeleton; the listed triples are the
/// non-triangles).
SimplicialComplex projective_plane() {
  std::vector<std::vector<std::size_t>> facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5},
                                                  {0, 4, 5}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5},
                                                  {2, 3, 4}, {2, 3, 5}};
  std::set<std::set<std::size_t>> fs;
  for (const auto& f : facets) fs.insert({f.begin(), f.end()});
  std::vector<std::vector<std::size_t>> nonfaces;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t k = j + 1; k < 6; ++k)
        if (!fs.count({i, j, k})) nonfaces.push_back({i, j, k});
  REQUIRE(nonfaces.size() == 10);
  return cx(6, nonfaces);
}

}  // namespace

TEST_CASE("construction, faces, dimension") {
  auto hollow = cx(3, {{0, 1, 2}});
  CHECK(hollow.is_face(VarMask{}));
  CHECK(hollow.is_face(VarMask::single(0)));
  CHECK(hollow.is_face(VarMask::single(0) | VarMask::single(2)));
  CHECK(!hollow.is_face(VarMask::first_n(3)));
  CHECK(hollow.max_face_size() == 2);
  CHECK(hollow.dim() == 1);

  auto b = fresh();
  auto facets = hollow.facets(b);
  CHECK(facets.size() == 3);

  // Full simplex and the empty complex {∅}.
  CHECK(cx(3, {}).dim() == 2);
  CHECK(cx(0, {}).dim() == -1);

  const RingPtr R = make_ring({"a", "b", "c"});
  auto fromI = SimplicialComplex::from_squarefree(ideal(R, {"a*b", "b*c"}));
  CHECK(fromI.n == 3);
  CHECK(fromI.nonfaces.size() == 2);
  CHECK_THROWS_AS(SimplicialComplex::from_squarefree(ideal(R, {"a^2"})), DomainError);
}

TEST_CASE("skeleton and link") {
  auto hollow = cx(3, {{0, 1, 2}});
  auto skel0 = hollow.skeleton(0);
  CHECK(skel0.dim() == 0);
  CHECK(!skel0.is_face(VarMask::single(0) | VarMask::single(1)));
  CHECK(skel0.is_face(VarMask::single(1)));

  // Link of a vertex in the hollow triangle: the two other vertices, no edge.
  auto lk = hollow.link(VarMask::single(0));
  CHECK(lk.n == 2);
  CHECK(lk.dim() == 0);
  CHECK(!lk.is_face(VarMask::first_n(2)));

  // Link of a vertex of the full simplex is a full simplex.
  auto full = cx(4, {});
  CHECK(full.link(VarMask::single(2)).nonfaces.empty());
  CHECK(full.skeleton(-1).dim() == -1);
}

TEST_CASE("reduced homology: frozen values") {
  auto q = FieldConfig::q();

  // Hollow triangle = circle.
  auto b1 = fresh();
  CHECK(reduced_homology_ranks(cx(3, {{0, 1, 2}}), q, b1) ==
        std::vector<std::int64_t>{0, 0, 1});

  // Two isolated points.
  auto b2 = fresh();
  CHECK(reduced_homology_ranks(cx(2, {{0, 1}}), q, b2) == std::vector<std::int64_t>{0, 1});

  // Four-cycle (nonfaces are the diagonals).
  auto b3 = fresh();
  CHECK(reduced_homology_ranks(cx(4, {{0, 2}, {1, 3}}), q, b3) ==
        std::vector<std::int64_t>{0, 0, 1});

  // A single point is contractible; a full simplex is contractible.
  auto b4 = fresh();
  CHECK(reduced_homology_ranks(cx(1, {}), q, b4) == std::vector<std::int64_t>{0, 0});
  auto b5 = fresh();
  CHECK(reduced_homology_ranks(cx(3, {}), q, b5) == std::vector<std::int64_t>{0, 0, 0, 0});

  // The complex {∅}: one unit of homology in degree -1.
  auto b6 = fresh();
  CHECK(reduced_homology_ranks(cx(0, {}), q, b6) == std::vector<std::int64_t>{1});

  // Boundary of the tetrahedron = 2-sphere.
  auto b7 = fresh();
  CHECK(reduced_homology_ranks(cx(4, {{0, 1, 2, 3}}), q, b7) ==
        std::vector<std::int64_t>{0, 0, 0, 1});

  // Disjoint edge and point: one extra component.
  auto b8 = fresh();
  CHECK(reduced_homology_ranks(cx(3, {{0, 2}, {1, 2}}), q, b8) ==
        std::vector<std::int64_t>{0, 1, 0});
}

TEST_CASE("projective plane: homology depends on the field") {
  auto rp2 = projective_plane();
  CHECK(rp2.dim() == 2);

  auto bq = fresh();
  CHECK(reduced_homology_ranks(rp2, FieldConfig::q(), bq) ==
        std::vector<std::int64_t>{0, 0, 0, 0});
  auto b2 = fresh();
  CHECK(reduced_homology_ranks(rp2, FieldConfig::fp(2), b2) ==
        std::vector<std::int64_t>{0, 0, 1, 1});
  auto b3 = fresh();
  CHECK(reduced_homology_ranks(rp2, FieldConfig::fp(3), b3) ==
        std::vector<std::int64_t>{0, 0, 0, 0});

  // Cohen–Macaulay over Q but not over F_2.
  auto c1 = fresh();
  CHECK(is_cm_complex(rp2, FieldConfig::q(), c1));
  auto c2 = fresh();
  CHECK(!is_cm_complex(rp2, FieldConfig::fp(2), c2));
}

TEST_CASE("the dual route: spheres too large for direct enumeration") {
  // Boundary of the 17-simplex on 18 vertices: a 16-sphere.  The direct
  // route cannot enumerate 2^18 faces; the nerve of the single nonface is
  // computed instead.
  std::vector<std::size_t> all(18);
  for (std::size_t i = 0; i < 18; ++i) all[i] = i;
  auto sphere = cx(18, {all});
  auto b = fresh();
  auto ranks = reduced_homology_ranks(sphere, FieldConfig::q(), b);
  REQUIRE(ranks.size() == 18);
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) CHECK(ranks[i] == 0);
  CHECK(ranks.back() == 1);
}

TEST_CASE("random complexes: library homology equals brute force") {
  std::mt19937_64 rng(7771);
  std::uniform_int_distribution<std::size_t> nv(3, 7), nnf(1, 6), card(2, 4);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = nv(rng);
    std::vector<VarMask> nf;
    const std::size_t k = nnf(rng);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::size_t> verts(n);
      for (std::size_t v = 0; v < n; ++v) verts[v] = v;
      std::shuffle(verts.begin(), verts.end(), rng);
      VarMask m;
      const std::size_t c = std::min(card(rng), n);
      for (std::size_t j = 0; j < c; ++j) m.set(verts[j]);
      nf.push_back(m);
    }
    // Drop masks that contain another (constructor wants minimal antichains).
    std::vector<VarMask> minimal;
    for (const auto& m : nf) {
      bool keep = true;
      for (const auto& o : nf)
        if (o != m && o.subset_of(m)) keep = false;
      if (keep) minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    auto C = SimplicialComplex(n, minimal);

    for (const auto& field : {FieldConfig::q(), FieldConfig::fp(2)}) {
      auto lib_budget = fresh();
      auto lib = reduced_homology_ranks(C, field, lib_budget);
      auto ref = brute_homology(C, field);
      while (lib.size() > ref.size()) {
        CHECK(lib.back() == 0);
        lib.pop_back();
      }
      while (ref.size() > lib.size()) {
        CHECK(ref.back() == 0);
        ref.pop_back();
      }
      CAPTURE(n);
      CHECK(lib == ref);
    }
  }
}

TEST_CASE("random complexes: Alexander duality between independent runs") {
  // H~_i(C) must equal H~_(n-3-i)(C*) where C* is the dual complex, built
  // here facet-by-facet.  Exercises both enumeration routes against each
  // other on different presentations of the same homological data.
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> nnf(2, 5), card(2, 3);
  const std::size_t n = 6;
  for (int iter = 0; iter < 25; ++iter) {
    std::vector<VarMask> nf;
    const std::size_t k = nnf(rng);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::size_t> verts = {0, 1, 2, 3, 4, 5};
      std::shuffle(verts.begin(), verts.end(), rng);
      VarMask m;
      for (std::size_t j = 0; j < card(rng); ++j) m.set(verts[j]);
      nf.push_back(m);
    }
    std::vector<VarMask> minimal;
    for (const auto& m : nf) {
      bool keep = true;
      for (const auto& o : nf)
        if (o != m && o.subset_of(m)) keep = false;
      if (keep) minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    auto C = SimplicialComplex(n, minimal);
    if (C.nonfaces.empty()) continue;

    // Dual complex: F is a face iff the complement of F is NOT a face of C.
    // Its minimal nonfaces are the complements of the facets of C.
    auto fb = fresh();
    auto facets = C.facets(fb);
    bool dual_empty = false;
    std::vector<VarMask> dual_nf;
    VarMask full = VarMask::first_n(n);
    for (const auto& f : facets) {
      auto c = full.minus(f);
      if (c.empty()) dual_empty = true;
      dual_nf.push_back(c);
    }
    if (dual_empty) continue;  // C is the full simplex; dual would be void
    std::vector<VarMask> dual_min;
    for (const auto& m : dual_nf) {
      bool keep = true;
      for (const auto& o : dual_nf)
        if (o != m && o.subset_of(m)) keep = false;
      if (keep) dual_min.push_back(m);
    }
    std::sort(dual_min.begin(), dual_min.end());
    dual_min.erase(std::unique(dual_min.begin(), dual_min.end()), dual_min.end());
    auto D = SimplicialComplex(n, dual_min);

    auto bc = fresh();
    auto hc = reduced_homology_ranks(C, FieldConfig::q(), bc);
    auto bd = fresh();
    auto hd = reduced_homology_ranks(D, FieldConfig::q(), bd);
    auto rank_of = [](const std::vector<std::int64_t>& h, std::int64_t deg) -> std::int64_t {
      // h[i] = rank of H~_(i-1)
      std::int64_t idx = deg + 1;
      if (idx < 0 || idx >= static_cast<std::int64_t>(h.size())) return 0;
      return h[static_cast<std::size_t>(idx)];
    };
    for (std::int64_t i = -1; i <= static_cast<std::int64_t>(n); ++i) {
      CAPTURE(iter);
      CAPTURE(i);
      CHECK(rank_of(hc, i) == rank_of(hd, static_cast<std::int64_t>(n) - 3 - i));
    }
  }
}

TEST_CASE("matrix rank") {
  auto q = FieldConfig::q();
  CHECK(matrix_rank({{1, 0}, {0, 1}}, q) == 2);
  CHECK(matrix_rank({{1, 2}, {2, 4}}, q) == 1);
  CHECK(matrix_rank({{0, 0}, {0, 0}}, q) == 0);
  CHECK(matrix_rank({{2}}, q) == 1);
  CHECK(matrix_rank({{2}}, FieldConfig::fp(2)) == 0);
  CHECK(matrix_rank({{2, 0}, {0, 2}}, FieldConfig::fp(2)) == 0);
  CHECK(matrix_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, q) == 3);          // det = 2
  CHECK(matrix_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, FieldConfig::fp(2)) == 2);

  // Random matrices: rank over Q equals rank over a large prime field.
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 6);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<std::int64_t>> M(r, std::vector<std::int64_t>(c));
    for (auto& row : M)
      for (auto& x : row) x = entry(rng);
    CHECK(matrix_rank(M, q) == matrix_rank(M, FieldConfig::fp(1000003)));
  }
}

TEST_CASE("minimum hitting sets") {
  auto m = [](std::vector<std::size_t> vs) {
    VarMask r;
    for (auto v : vs) r.set(v);
    return r;
  };
  CHECK(min_hitting_set_size({}) == 0);
  CHECK(min_hitting_set_size({m({0})}) == 1);
  CHECK(min_hitting_set_size({m({0, 1}), m({2, 3})}) == 2);
  CHECK(min_hitting_set_size({m({0, 1}), m({1, 2}), m({0, 2})}) == 2);
  CHECK(min_hitting_set_size({m({0, 1, 2}), m({0, 3}), m({1, 3})}) == 2);
}

TEST_CASE("Cohen–Macaulay complexes and depth: frozen values") {
  auto q = FieldConfig::q();
  auto check_cm = [&](const SimplicialComplex& C, bool expect) {
    auto b = fresh();
    CHECK(is_cm_complex(C, q, b) == expect);
  };
  check_cm(cx(3, {{0, 1, 2}}), true);     // circle
  check_cm(cx(4, {{0, 2}, {1, 3}}), true);  // 4-cycle
  check_cm(cx(4, {{0, 1, 2, 3}}), true);  // 2-sphere
  check_cm(cx(3, {}), true);              // simplex
  check_cm(cx(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), false);  // two disjoint edges
  check_cm(cx(3, {{0, 2}, {1, 2}}), false);                  // edge plus point

  auto depth_of = [&](const SimplicialComplex& C) {
    auto b = fresh();
    return complex_depth(C, q, b);
  };
  CHECK(depth_of(cx(3, {{0, 1, 2}})) == 2);
  CHECK(depth_of(cx(3, {{0, 2}, {1, 2}})) == 1);
  CHECK(depth_of(cx(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}})) == 1);
  CHECK(depth_of(cx(0, {})) == 0);
  CHECK(depth_of(cx(2, {})) == 2);
}

TEST_CASE("budgets stop enumeration loudly") {
  // Four isolated points (all six edges forbidden) force the direct route;
  // enumerating its five faces overruns a budget of three cells.
  CellBudget tiny{3};
  CHECK_THROWS_AS(reduced_homology_ranks(
                      cx(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                      FieldConfig::q(), tiny),
                  ResourceLimitError);
  CHECK_THROWS_AS(FieldConfig::fp(4), DomainError);
  CHECK_THROWS_AS(FieldConfig::fp(0), DomainError);
}
