#pragma once

// Finite simple edge-weighted graphs and their edge ideals, plus the
// structural predicates the power-criteria need: very-well-coveredness,
// order-compatible cover/independent labelings, pendant perfect matchings,
// cores, stars, complete cores, trees.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weid/ideal.hpp"
#include "weid/ring.hpp"

namespace weid {

/// Undirected simple graph with positive integer edge weights.
/// Vertices are indexed 0..n-1 and carry string labels; edges are stored with
/// u < v, sorted, unique.  Weight 1 is the unweighted case.
class WeightedGraph {
 public:
  struct Edge {
    std::size_t u, v;  // u < v
    Exp w;
    bool operator==(const Edge&) const = default;
  };

  WeightedGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t n() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Adjacency of v as a bitmask over vertex indices (n <= 64 supported).
  std::uint64_t adj(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const;
  bool has_edge(std::size_t u, std::size_t v) const;

  /// Weight of edge {u, v}; nullopt when absent.
  std::optional<Exp> weight(std::size_t u, std::size_t v) const;

  /// Vertices of degree exactly 1, ascending.
  std::vector<std::size_t> leaves() const;

  bool is_bipartite() const;
  bool is_connected() const;
  bool is_tree() const;

  /// True when every pair of the given vertices is adjacent.
  bool is_clique(const std::vector<std::size_t>& vs) const;

  /// Induced subgraph on the vertices with set bits in keep (order
  /// preserved, weights preserved, labels preserved).  Isolated vertices are
  /// allowed in the result.
  WeightedGraph induced(std::uint64_t keep) const;

  /// Induced subgraph dropping exactly the listed vertices.
  WeightedGraph remove_vertices(const std::vector<std::size_t>& drop) const;

  /// Stable serialization (labels + weighted edge list); memoization key.
  std::string canonical_key() const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

/// Edge ideal of the weighted graph: one generator (x_u x_v)^w per edge, in
/// the ring whose variables are the vertex labels in vertex order.
/// Errors: graph without edges -> domain error.
MonomialIdeal edge_ideal(const WeightedGraph& g);

/// Matched vertex pairs (x_i, y_i), i = 1..t in order.  Used both for
/// order-compatible cover labelings and for pendant perfect matchings.
struct PairLabeling {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (x_i, y_i)
  std::size_t t() const { return pairs.size(); }
  std::size_t x(std::size_t i) const { return pairs[i].first; }
  std::size_t y(std::size_t i) const { return pairs[i].second; }
};

/// Decide very-well-coveredness: no isolated vertices (else domain error),
/// even order, and every maximal independent set of size exactly n/2.
/// Enumeration is exact; vertex count above 16 -> resource error.
bool is_very_well_covered(const WeightedGraph& g);

/// Validate an order-compatible labeling: pairs partition V, every (x_i, y_i)
/// is an edge, the y-side is independent (equivalently the x-side is a vertex
/// cover), and the five ordering conditions hold:
///   (2*) x_i y_j in E implies i <= j,
///   (3*) x_i y_j in E implies x_i x_j not in E,
///   (4*) x_i y_j, x_j y_k in E implies x_i y_k in E,
///   (5*) x_i y_j in E and x_j x_k in E implies x_i x_k in E.
/// Returns an empty string when valid, else a human-readable reason.
std::string check_labeling(const WeightedGraph& g, const PairLabeling& L);

/// Search for an order-compatible labeling; first hit in lexicographic order
/// of the pair sequence, or nullopt.  Pre: is_very_well_covered(g).
std::optional<PairLabeling> find_vwc_labeling(const WeightedGraph& g);

/// The pendant perfect matching: every y_i a leaf, pairs partition V.
/// Unique when it exists (up to the K2-component convention x = lower
/// index); nullopt otherwise.
std::optional<PairLabeling> pendant_matching(const WeightedGraph& g);

/// Induced subgraph on the x-side of a labeling (the core).
WeightedGraph core_subgraph(const WeightedGraph& g, const PairLabeling& L);

/// Admissible centers of a star on the given vertex set of g's core:
/// for a star with t >= 3 the unique hub; for a single edge both ends; for a
/// single vertex itself; empty when the core is not a star.
std::vector<std::size_t> star_centers(const WeightedGraph& core);

/// True when the core is complete (every pair adjacent).
bool is_complete(const WeightedGraph& core);

}  // namespace weid
