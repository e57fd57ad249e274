#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "weid/decompose.hpp"
#include "weid/graph.hpp"
#include "weid/ideal.hpp"
#include "weid/io.hpp"

using namespace weid;
using weid::testing::ideal;

namespace {

using E = WeightedGraph::Edge;

WeightedGraph path4() {
  // y1 - x1 - x2 - y2, weights 2, 1, 3.
  return WeightedGraph({"y1", "x1", "x2", "y2"}, {{0, 1, 2}, {1, 2, 1}, {2, 3, 3}});
}

WeightedGraph c4() {
  return WeightedGraph({"a", "b", "c", "d"}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
}

/// Independent very-well-covered decision: enumerate all independent sets,
/// keep the maximal ones, demand size n/2 throughout.
bool brute_vwc(const WeightedGraph& g) {
  const std::size_t n = g.n();
  REQUIRE(n <= 10);
  for (std::size_t v = 0; v < n; ++v) REQUIRE(g.degree(v) > 0);
  if (n % 2) return false;
  std::vector<std::uint64_t> independent;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if ((s >> v) & 1 && (g.adj(v) & s)) ok = false;
    if (ok) independent.push_back(s);
  }
  for (auto s : independent) {
    bool maximal = true;
    for (auto t : independent)
      if (t != s && (s & ~t) == 0) maximal = false;
    if (maximal && static_cast<std::size_t>(std::popcount(s)) != n / 2) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("graph construction and accessors") {
  auto g = path4();
  CHECK(g.n() == 4);
  CHECK(g.num_edges() == 3);
  CHECK(g.label(1) == "x1");
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.weight(0, 1) == Exp{2});
  CHECK(g.weight(3, 2) == Exp{3});
  CHECK(g.weight(0, 3) == std::nullopt);
  CHECK(g.leaves() == std::vector<std::size_t>{0, 3});
  CHECK(g.adj(1) == 0b0101);

  // Edges normalize to u < v and sort.
  WeightedGraph h({"p", "q"}, {{1, 0, 5}});
  CHECK(h.edges() == std::vector<E>{{0, 1, 5}});

  CHECK_THROWS_AS(WeightedGraph({"p", "p"}, {}), DomainError);
  CHECK_THROWS_AS(WeightedGraph({"p", ""}, {}), DomainError);
  CHECK_THROWS_AS(WeightedGraph({"p", "q"}, {{0, 0, 1}}), DomainError);
  CHECK_THROWS_AS(WeightedGraph({"p", "q"}, {{0, 1, 0}}), DomainError);
  CHECK_THROWS_AS(WeightedGraph({"p", "q"}, {{0, 2, 1}}), DomainError);
  CHECK_THROWS_AS(WeightedGraph({"p", "q"}, {{0, 1, 1}, {1, 0, 2}}), DomainError);
}

TEST_CASE("structure predicates") {
  auto g = path4();
  CHECK(g.is_bipartite());
  CHECK(g.is_connected());
  CHECK(g.is_tree());
  CHECK(!g.is_clique({1, 2, 3}));
  CHECK(g.is_clique({1, 2}));

  auto cyc = c4();
  CHECK(cyc.is_bipartite());
  CHECK(!cyc.is_tree());

  WeightedGraph tri({"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(!tri.is_bipartite());
  CHECK(tri.is_clique({0, 1, 2}));

  WeightedGraph two({"a", "b", "c", "d"}, {{0, 1, 1}, {2, 3, 1}});
  CHECK(!two.is_connected());
  CHECK(!two.is_tree());
}

TEST_CASE("induced subgraphs and canonical keys") {
  auto g = path4();
  auto sub = g.induced(0b0110);  // x1, x2
  CHECK(sub.n() == 2);
  CHECK(sub.labels() == std::vector<std::string>{"x1", "x2"});
  CHECK(sub.edges() == std::vector<E>{{0, 1, 1}});

  auto dropped = g.remove_vertices({0});
  CHECK(dropped.n() == 3);
  CHECK(dropped.num_edges() == 2);
  CHECK(dropped.labels() == std::vector<std::string>{"x1", "x2", "y2"});

  CHECK(g.canonical_key() == path4().canonical_key());
  WeightedGraph other({"y1", "x1", "x2", "y2"}, {{0, 1, 2}, {1, 2, 1}, {2, 3, 4}});
  CHECK(g.canonical_key() != other.canonical_key());
  CHECK(g == path4());
  CHECK(g != other);
}

TEST_CASE("edge ideals") {
  auto I = edge_ideal(path4());
  const RingPtr R = make_ring({"y1", "x1", "x2", "y2"});
  CHECK(I == ideal(R, {"y1^2*x1^2", "x1*x2", "x2^3*y2^3"}));
  CHECK_THROWS_AS(edge_ideal(WeightedGraph({"a", "b"}, {})), DomainError);
}

TEST_CASE("very-well-covered graphs: frozen values") {
  CHECK(is_very_well_covered(path4()));
  CHECK(is_very_well_covered(c4()));

  WeightedGraph star({"a", "b", "c", "d"}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  CHECK(!is_very_well_covered(star));

  WeightedGraph tri({"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(!is_very_well_covered(tri));

  WeightedGraph isolated({"a", "b", "c"}, {{0, 1, 1}});
  CHECK_THROWS_AS(is_very_well_covered(isolated), DomainError);

  // 18 vertices exceeds the exact-enumeration limit.
  std::vector<std::string> names;
  std::vector<E> match;
  for (std::size_t i = 0; i < 9; ++i) {
    names.push_back("u" + std::to_string(i));
    names.push_back("v" + std::to_string(i));
    match.push_back({2 * i, 2 * i + 1, 1});
  }
  CHECK_THROWS_AS(is_very_well_covered(WeightedGraph(names, match)), ResourceLimitError);
}

TEST_CASE("very-well-covered graphs: brute-force cross-check") {
  std::mt19937_64 rng(60606);
  std::uniform_int_distribution<std::size_t> nv(4, 8);
  std::uniform_int_distribution<int> coin(0, 2);
  int checked = 0;
  for (int iter = 0; iter < 200 && checked < 60; ++iter) {
    const std::size_t n = nv(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<E> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng) == 0) edges.push_back({i, j, 1});
    WeightedGraph g(names, edges);
    bool isolated = false;
    for (std::size_t v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
    if (isolated) continue;
    ++checked;
    CAPTURE(n);
    CHECK(is_very_well_covered(g) == brute_vwc(g));
  }
  CHECK(checked == 60);
}

TEST_CASE("order-compatible labelings") {
  auto p = path4();
  auto L = find_vwc_labeling(p);
  REQUIRE(L.has_value());
  CHECK(L->pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 3}});
  CHECK(check_labeling(p, *L).empty());

  // The 4-cycle is very well covered, yet both perfect matchings leave
  // opposite-direction cross edges: no order-compatible labeling exists.
  CHECK(!find_vwc_labeling(c4()).has_value());

  // Violations are reported with a reason.
  PairLabeling bad;
  bad.pairs = {{0, 1}, {2, 3}};  // (y1, x1) has x-side y1 a leaf: y-side x1 not independent
  CHECK(!check_labeling(p, bad).empty());
  PairLabeling notedge;
  notedge.pairs = {{0, 2}, {1, 3}};
  CHECK(!check_labeling(p, notedge).empty());
  PairLabeling incomplete;
  incomplete.pairs = {{1, 0}};
  CHECK(!check_labeling(p, incomplete).empty());
}

TEST_CASE("labeled covers match associated primes of the radical edge ideal") {
  // Every minimal vertex cover of a graph with a pendant perfect matching
  // contains exactly one endpoint of each matched pair.
  for (const auto& g : {path4(), WeightedGraph({"x1", "y1", "x2", "y2", "x3", "y3"},
                                               {{0, 1, 1},
                                                {0, 2, 2},
                                                {0, 4, 1},
                                                {2, 3, 1},
                                                {4, 5, 3}})}) {
    auto M = pendant_matching(g);
    REQUIRE(M.has_value());
    auto primes = associated_primes(radical(edge_ideal(g)));
    for (const auto& P : primes) {
      for (std::size_t k = 0; k < M->t(); ++k) {
        int hit = (P.test(M->x(k)) ? 1 : 0) + (P.test(M->y(k)) ? 1 : 0);
        CHECK(hit == 1);
      }
    }
  }
}

TEST_CASE("pendant matchings") {
  auto M = pendant_matching(path4());
  REQUIRE(M.has_value());
  CHECK(M->pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 3}});

  // A K2 component matches with the lower index on the x side.
  WeightedGraph k2({"p", "q"}, {{0, 1, 7}});
  auto M2 = pendant_matching(k2);
  REQUIRE(M2.has_value());
  CHECK(M2->pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

  // The 4-cycle has no pendant vertices at all.
  CHECK(!pendant_matching(c4()).has_value());
  // A path on three vertices has an odd vertex count.
  CHECK(!pendant_matching(WeightedGraph({"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}})).has_value());
  // Six-vertex caterpillar whose spine vertex lacks a pendant.
  CHECK(!pendant_matching(WeightedGraph({"a", "b", "c", "d", "e", "f"},
                                        {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {1, 4, 1}, {1, 5, 1}}))
             .has_value());
}

TEST_CASE("cores, stars, complete cores") {
  WeightedGraph star3({"x1", "y1", "x2", "y2", "x3", "y3"},
                      {{0, 1, 1}, {0, 2, 2}, {0, 4, 1}, {2, 3, 1}, {4, 5, 3}});
  auto M = pendant_matching(star3);
  REQUIRE(M.has_value());
  auto core = core_subgraph(star3, *M);
  CHECK(core.n() == 3);
  CHECK(core.labels() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(core.num_edges() == 2);
  CHECK(star_centers(core) == std::vector<std::size_t>{0});
  CHECK(!is_complete(core));

  // A single core edge admits both ends as centers; a lone vertex is its own.
  WeightedGraph p4 = path4();
  auto M2 = pendant_matching(p4);
  auto core2 = core_subgraph(p4, *M2);
  CHECK(core2.n() == 2);
  CHECK(star_centers(core2) == std::vector<std::size_t>{0, 1});
  CHECK(is_complete(core2));

  WeightedGraph k2({"p", "q"}, {{0, 1, 1}});
  auto core1 = core_subgraph(k2, *pendant_matching(k2));
  CHECK(core1.n() == 1);
  CHECK(star_centers(core1) == std::vector<std::size_t>{0});
  CHECK(is_complete(core1));

  // A triangle core is complete but not a star.
  WeightedGraph tri({"x1", "y1", "x2", "y2", "x3", "y3"},
                    {{0, 1, 1}, {2, 3, 1}, {4, 5, 1}, {0, 2, 1}, {0, 4, 1}, {2, 4, 1}});
  auto coreT = core_subgraph(tri, *pendant_matching(tri));
  CHECK(coreT.num_edges() == 3);
  CHECK(star_centers(coreT).empty());
  CHECK(is_complete(coreT));

  // A path core on four vertices is neither.
  WeightedGraph p8({"x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4"},
                   {{0, 1, 1}, {2, 3, 1}, {4, 5, 1}, {6, 7, 1},
                    {0, 2, 1}, {2, 4, 1}, {4, 6, 1}});
  auto coreP = core_subgraph(p8, *pendant_matching(p8));
  CHECK(star_centers(coreP).empty());
  CHECK(!is_complete(coreP));
}

TEST_CASE("graph json round trip") {
  auto g = path4();
  CHECK(graph_from_json(graph_to_json(g)) == g);
  auto j = graph_to_json(g);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 3);
}
