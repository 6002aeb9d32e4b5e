#include "snfgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace snfgraph {

namespace {

constexpr std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

std::uint64_t full_mask(std::uint32_t n) {
  return n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
}

void check_order(std::uint32_t n) {
  if (n == 0 || n > kMaxOrder) {
    throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
  }
}

void check_edge(std::uint32_t n, const Edge& e) {
  if (e.first >= n || e.second >= n) {
    throw std::out_of_range("edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ") has an endpoint >= " +
                            std::to_string(n));
  }
  if (e.first == e.second) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
  }
}

}  // namespace

Graph::Graph(std::uint32_t n) {
  check_order(n);
  adj_.assign(n, 0);
}

Graph Graph::from_edges(std::uint32_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    check_edge(n, e);
    g.adj_[e.first] |= bit(e.second);
    g.adj_[e.second] |= bit(e.first);
  }
  return g;
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  const auto n = static_cast<std::uint32_t>(rows.size());
  check_order(n);
  for (VertexId i = 0; i < n; ++i) {
    if (rows[i] & ~full_mask(n)) {
      throw std::out_of_range("adjacency row " + std::to_string(i) + " exceeds the order");
    }
    if (rows[i] & bit(i)) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    }
    for (VertexId j = 0; j < n; ++j) {
      if (((rows[i] >> j) & 1U) != ((rows[j] >> i) & 1U)) {
        throw std::invalid_argument("adjacency rows are not symmetric");
      }
    }
  }
  Graph g;
  g.adj_ = std::move(rows);
  return g;
}

std::uint32_t Graph::edge_count() const {
  std::uint32_t twice = 0;
  for (auto row : adj_) twice += static_cast<std::uint32_t>(std::popcount(row));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < order(); ++u) {
    std::uint64_t later = adj_[u] & ~full_mask(u + 1);
    while (later) {
      auto v = static_cast<VertexId>(std::countr_zero(later));
      out.emplace_back(u, v);
      later &= later - 1;
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const VertexId> perm) const {
  const std::uint32_t n = order();
  if (perm.size() != n) {
    throw std::invalid_argument("permutation size does not match the graph order");
  }
  std::uint64_t seen = 0;
  for (auto p : perm) {
    if (p >= n || (seen & bit(p))) throw std::invalid_argument("not a permutation");
    seen |= bit(p);
  }
  Graph out(n);
  for (VertexId u = 0; u < n; ++u) {
    std::uint64_t row = adj_[u];
    while (row) {
      auto v = static_cast<VertexId>(std::countr_zero(row));
      out.adj_[perm[u]] |= bit(perm[v]);
      row &= row - 1;
    }
  }
  return out;
}

Graph Graph::with_edges(std::span<const Edge> edges) const {
  Graph out = *this;
  for (const Edge& e : edges) {
    check_edge(order(), e);
    out.adj_[e.first] |= bit(e.second);
    out.adj_[e.second] |= bit(e.first);
  }
  return out;
}

Graph Graph::without_edges(std::span<const Edge> edges) const {
  Graph out = *this;
  for (const Edge& e : edges) {
    check_edge(order(), e);
    out.adj_[e.first] &= ~bit(e.second);
    out.adj_[e.second] &= ~bit(e.first);
  }
  return out;
}

std::uint32_t degree(const Graph& g, VertexId v) {
  if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return static_cast<std::uint32_t>(std::popcount(g.neighbours(v)));
}

std::vector<std::uint32_t> degree_sequence(const Graph& g) {
  std::vector<std::uint32_t> out;
  out.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) out.push_back(degree(g, v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

// BFS layers from `source`; returns eccentricity or kInfiniteDiameter.
std::uint32_t eccentricity(const Graph& g, VertexId source) {
  const std::uint64_t all = full_mask(g.order());
  std::uint64_t seen = bit(source);
  std::uint64_t frontier = seen;
  std::uint32_t depth = 0;
  while (seen != all) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) {
      next |= g.neighbours(static_cast<VertexId>(std::countr_zero(f)));
    }
    next &= ~seen;
    if (!next) return kInfiniteDiameter;
    seen |= next;
    frontier = next;
    ++depth;
  }
  return depth;
}

}  // namespace

bool is_connected(const Graph& g) {
  return g.order() > 0 && eccentricity(g, 0) != kInfiniteDiameter;
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto e = eccentricity(g, v);
    if (e == kInfiniteDiameter) return kInfiniteDiameter;
    best = std::max(best, e);
  }
  return best;
}

bool is_complete(const Graph& g) {
  const std::uint64_t all = full_mask(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.neighbours(v) != (all & ~bit(v))) return false;
  }
  return true;
}

IntMatrix laplacian(const Graph& g) {
  const std::uint32_t n = g.order();
  IntMatrix m(n, n);
  for (VertexId i = 0; i < n; ++i) {
    m(i, i) = degree(g, i);
    for (VertexId j = 0; j < n; ++j) {
      if (g.adjacent(i, j)) m(i, j) = -1;
    }
  }
  return m;
}

Graph complete(std::uint32_t n) {
  check_order(n);
  std::vector<std::uint64_t> rows(n);
  for (VertexId v = 0; v < n; ++v) rows[v] = full_mask(n) & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

Graph complete_bipartite(std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("complete_bipartite parts must be nonempty");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < a; ++u) {
    for (VertexId v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(a + b, edges);
}

Graph path(std::uint32_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph star(std::uint32_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

}  // namespace snfgraph
