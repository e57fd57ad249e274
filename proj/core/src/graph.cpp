#include "weid/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>

namespace weid {

namespace {
constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }
}  // namespace

WeightedGraph::WeightedGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  if (labels_.size() > 64) throw ResourceLimitError("graphs support at most 64 vertices");
  // Unique non-empty labels (they double as ring variables).
  {
    std::vector<std::string> s = labels_;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw DomainError("duplicate vertex label");
    for (const auto& l : labels_)
      if (l.empty()) throw DomainError("empty vertex label");
  }
  for (auto& e : edges_) {
    if (e.u >= labels_.size() || e.v >= labels_.size())
      throw DomainError("edge endpoint out of range");
    if (e.u == e.v) throw DomainError("loop edge " + labels_[e.u]);
    if (e.w == 0) throw DomainError("zero edge weight on " + labels_[e.u] + "-" + labels_[e.v]);
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw DomainError("duplicate edge " + labels_[edges_[i].u] + "-" + labels_[edges_[i].v]);
  adj_.assign(labels_.size(), 0);
  for (const auto& e : edges_) {
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

std::size_t WeightedGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::popcount(adj_.at(v)));
}

bool WeightedGraph::has_edge(std::size_t u, std::size_t v) const {
  return u < n() && v < n() && (adj_[u] >> v) & 1;
}

std::optional<Exp> WeightedGraph::weight(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.u == u && e.v == v) return e.w;
  return std::nullopt;
}

std::vector<std::size_t> WeightedGraph::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n(); ++v)
    if (degree(v) == 1) out.push_back(v);
  return out;
}

bool WeightedGraph::is_bipartite() const {
  std::vector<int> color(n(), -1);
  for (std::size_t s = 0; s < n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      std::uint64_t nb = adj_[u];
      while (nb) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(nb));
        nb &= nb - 1;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool WeightedGraph::is_connected() const {
  if (n() == 0) return true;
  std::uint64_t seen = bit(0);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    std::uint64_t nb = adj_[u] & ~seen;
    while (nb) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(nb));
      nb &= nb - 1;
      seen |= bit(v);
      stack.push_back(v);
    }
  }
  return std::popcount(seen) == static_cast<int>(n());
}

bool WeightedGraph::is_tree() const {
  return n() >= 1 && num_edges() == n() - 1 && is_connected();
}

bool WeightedGraph::is_clique(const std::vector<std::size_t>& vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!has_edge(vs[i], vs[j])) return false;
  return true;
}

WeightedGraph WeightedGraph::induced(std::uint64_t keep) const {
  std::vector<std::size_t> map(n(), SIZE_MAX);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n(); ++v)
    if ((keep >> v) & 1) {
      map[v] = labels.size();
      labels.push_back(labels_[v]);
    }
  std::vector<Edge> edges;
  for (const auto& e : edges_)
    if (map[e.u] != SIZE_MAX && map[e.v] != SIZE_MAX)
      edges.push_back({map[e.u], map[e.v], e.w});
  return WeightedGraph(std::move(labels), std::move(edges));
}

WeightedGraph WeightedGraph::remove_vertices(const std::vector<std::size_t>& drop) const {
  std::uint64_t keep = (n() == 64) ? ~std::uint64_t{0} : (bit(n()) - 1);
  for (auto v : drop) {
    if (v >= n()) throw DomainError("vertex out of range");
    keep &= ~bit(v);
  }
  return induced(keep);
}

std::string WeightedGraph::canonical_key() const {
  std::ostringstream os;
  for (const auto& l : labels_) os << l << '\x1f';
  os << '|';
  for (const auto& e : edges_) os << e.u << '-' << e.v << ':' << e.w << ';';
  return os.str();
}

MonomialIdeal edge_ideal(const WeightedGraph& g) {
  if (g.num_edges() == 0) throw DomainError("edge ideal of an edgeless graph");
  auto ring = make_ring(g.labels());
  std::vector<Monomial> gens;
  gens.reserve(g.num_edges());
  for (const auto& e : g.edges())
    gens.push_back(Monomial::from_pairs(ring->size(), {{e.u, e.w}, {e.v, e.w}}));
  return MonomialIdeal::make(std::move(ring), std::move(gens));
}

// ---------------------------------------------------------------------------
// Very-well-coveredness via exact maximal-independent-set enumeration
// (Bron–Kerbosch with pivoting on the complement graph).

namespace {

struct MisScan {
  const std::vector<std::uint64_t>& nc;  // complement adjacency
  std::size_t target;
  bool ok = true;

  void run(std::uint64_t R, std::uint64_t P, std::uint64_t X) {
    if (!ok) return;
    if (!P && !X) {
      if (static_cast<std::size_t>(std::popcount(R)) != target) ok = false;
      return;
    }
    // Tomita pivot: maximize |P ∩ N(u)| over u in P ∪ X.
    std::uint64_t PX = P | X;
    int bestc = -1;
    std::size_t pivot = 0;
    std::uint64_t it = PX;
    while (it) {
      std::size_t u = static_cast<std::size_t>(std::countr_zero(it));
      it &= it - 1;
      int c = std::popcount(P & nc[u]);
      if (c > bestc) {
        bestc = c;
        pivot = u;
      }
    }
    std::uint64_t ext = P & ~nc[pivot];
    while (ext) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(ext));
      std::uint64_t vb = std::uint64_t{1} << v;
      ext &= ext - 1;
      run(R | vb, P & nc[v], X & nc[v]);
      if (!ok) return;
      P &= ~vb;
      X |= vb;
    }
  }
};

}  // namespace

bool is_very_well_covered(const WeightedGraph& g) {
  if (g.n() == 0) throw DomainError("very-well-covered check on the empty graph");
  for (std::size_t v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0)
      throw DomainError("isolated vertex " + g.label(v) + " in very-well-covered check");
  if (g.n() > 16)
    throw ResourceLimitError(
        "very-well-covered check enumerates maximal independent sets; vertex limit is 16");
  if (g.n() % 2 != 0) return false;
  std::uint64_t full = (std::uint64_t{1} << g.n()) - 1;
  std::vector<std::uint64_t> nc(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) nc[v] = full & ~g.adj(v) & ~bit(v);
  MisScan scan{nc, g.n() / 2};
  scan.run(0, full, 0);
  return scan.ok;
}

// ---------------------------------------------------------------------------
// Order-compatible labelings

std::string check_labeling(const WeightedGraph& g, const PairLabeling& L) {
  const std::size_t t = L.t();
  if (2 * t != g.n()) return "labeling does not cover the vertex set";
  std::vector<bool> used(g.n(), false);
  for (std::size_t i = 0; i < t; ++i) {
    auto [x, y] = L.pairs[i];
    if (x >= g.n() || y >= g.n() || x == y) return "bad pair indices";
    if (used[x] || used[y]) return "labeling reuses a vertex";
    used[x] = used[y] = true;
    if (!g.has_edge(x, y)) return "matched pair " + g.label(x) + "," + g.label(y) + " is not an edge";
  }
  // Y-side independence (equivalently: the x-side is a vertex cover).
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      if (g.has_edge(L.y(i), L.y(j)))
        return "y-side is not independent: " + g.label(L.y(i)) + "-" + g.label(L.y(j));
  // (2*) x_i y_j in E implies i <= j.
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g.has_edge(L.x(i), L.y(j)))
        return "ordering violated: x_" + std::to_string(i + 1) + " y_" + std::to_string(j + 1);
  // (3*) x_i y_j in E implies x_i x_j not in E.
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (i != j && g.has_edge(L.x(i), L.y(j)) && g.has_edge(L.x(i), L.x(j)))
        return "cover/cross conflict at indices " + std::to_string(i + 1) + "," +
               std::to_string(j + 1);
  // (4*) x_i y_j, x_j y_k in E implies x_i y_k in E.
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t k = 0; k < t; ++k) {
        if (i == j || j == k || i == k) continue;
        if (g.has_edge(L.x(i), L.y(j)) && g.has_edge(L.x(j), L.y(k)) &&
            !g.has_edge(L.x(i), L.y(k)))
          return "cross-transitivity fails at " + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + "," + std::to_string(k + 1);
      }
  // (5*) x_i y_j in E and x_j x_k in E implies x_i x_k in E.
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t k = 0; k < t; ++k) {
        if (i == j || j == k || i == k) continue;
        if (g.has_edge(L.x(i), L.y(j)) && g.has_edge(L.x(j), L.x(k)) &&
            !g.has_edge(L.x(i), L.x(k)))
          return "cover-transitivity fails at " + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + "," + std::to_string(k + 1);
      }
  return "";
}

namespace {

bool labeling_dfs(const WeightedGraph& g, PairLabeling& L, std::uint64_t used) {
  const std::size_t t = g.n() / 2;
  if (L.t() == t) return check_labeling(g, L).empty();
  for (std::size_t x = 0; x < g.n(); ++x) {
    if ((used >> x) & 1) continue;
    for (std::size_t y = 0; y < g.n(); ++y) {
      if (y == x || ((used >> y) & 1) || !g.has_edge(x, y)) continue;
      L.pairs.push_back({x, y});
      // Partial pruning: all five conditions only mention assigned indices,
      // so a violation among them can never be repaired later.
      bool viable = true;
      {
        const std::size_t k = L.t() - 1;  // new index
        for (std::size_t j = 0; j < k && viable; ++j) {
          if (g.has_edge(L.y(k), L.y(j))) viable = false;                       // Y independent
          if (g.has_edge(L.x(k), L.y(j))) viable = false;                       // (2*)
          if (g.has_edge(L.x(j), L.y(k)) && g.has_edge(L.x(j), L.x(k))) viable = false;  // (3*)
        }
        for (std::size_t i = 0; i < L.t() && viable; ++i)
          for (std::size_t j = 0; j < L.t() && viable; ++j)
            for (std::size_t m = 0; m < L.t() && viable; ++m) {
              if (i == j || j == m || i == m) continue;
              if (g.has_edge(L.x(i), L.y(j)) && g.has_edge(L.x(j), L.y(m)) &&
                  !g.has_edge(L.x(i), L.y(m)))
                viable = false;  // (4*)
              if (g.has_edge(L.x(i), L.y(j)) && g.has_edge(L.x(j), L.x(m)) &&
                  !g.has_edge(L.x(i), L.x(m)))
                viable = false;  // (5*)
            }
      }
      if (viable && labeling_dfs(g, L, used | bit(x) | bit(y))) return true;
      L.pairs.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<PairLabeling> find_vwc_labeling(const WeightedGraph& g) {
  if (!is_very_well_covered(g))
    throw DomainError("labeling search requires a very well-covered graph");
  PairLabeling L;
  if (labeling_dfs(g, L, 0)) return L;
  return std::nullopt;
}

std::optional<PairLabeling> pendant_matching(const WeightedGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(g.n(), false);
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 1 || used[v]) continue;
    std::size_t u = static_cast<std::size_t>(std::countr_zero(g.adj(v)));
    if (used[u]) return std::nullopt;  // partner already matched elsewhere
    used[u] = used[v] = true;
    if (g.degree(u) == 1) {
      // Isolated-edge component: both ends are leaves; x is the lower index.
      pairs.push_back({std::min(u, v), std::max(u, v)});
    } else {
      pairs.push_back({u, v});
    }
  }
  for (std::size_t v = 0; v < g.n(); ++v)
    if (!used[v]) return std::nullopt;  // some vertex has no pendant partner
  std::sort(pairs.begin(), pairs.end());
  return PairLabeling{std::move(pairs)};
}

WeightedGraph core_subgraph(const WeightedGraph& g, const PairLabeling& L) {
  std::uint64_t keep = 0;
  for (const auto& [x, y] : L.pairs) {
    (void)y;
    keep |= bit(x);
  }
  return g.induced(keep);
}

std::vector<std::size_t> star_centers(const WeightedGraph& core) {
  const std::size_t t = core.n();
  if (t == 0) return {};
  if (t == 1) return {0};
  if (core.num_edges() != t - 1 || !core.is_connected()) return {};
  if (t == 2) return {0, 1};
  for (std::size_t v = 0; v < t; ++v)
    if (core.degree(v) == t - 1) return {v};
  return {};
}

bool is_complete(const WeightedGraph& core) {
  const std::size_t t = core.n();
  return core.num_edges() == t * (t - 1) / 2 &&
         (t < 2 || [&] {
           for (std::size_t u = 0; u < t; ++u)
             for (std::size_t v = u + 1; v < t; ++v)
               if (!core.has_edge(u, v)) return false;
           return true;
         }());
}

}  // namespace weid
