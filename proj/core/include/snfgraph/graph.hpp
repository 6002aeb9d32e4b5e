#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snfgraph/int_matrix.hpp"

namespace snfgraph {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr std::uint32_t kMaxOrder = 64;

/// Returned by diameter() for disconnected graphs.
inline constexpr std::uint32_t kInfiniteDiameter =
    std::numeric_limits<std::uint32_t>::max();

/// Simple undirected graph on at most 64 vertices. Row i of the adjacency
/// is a bitset of the neighbours of vertex i. Loop-free and symmetric by
/// construction; immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices. Throws std::invalid_argument unless
  /// 1 <= n <= 64.
  explicit Graph(std::uint32_t n);

  /// Throws std::out_of_range for an endpoint >= n and
  /// std::invalid_argument for a self-loop. Duplicate edges collapse.
  static Graph from_edges(std::uint32_t n, std::span<const Edge> edges);
  static Graph from_edges(std::uint32_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from adjacency rows; validates symmetry and loop-freeness.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  std::uint32_t order() const { return static_cast<std::uint32_t>(adj_.size()); }
  std::uint32_t edge_count() const;

  std::uint64_t neighbours(VertexId v) const { return adj_.at(v); }
  const std::vector<std::uint64_t>& rows() const { return adj_; }
  bool adjacent(VertexId u, VertexId v) const {
    return (adj_.at(u) >> v) & 1U;
  }

  /// Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  /// Vertex i of this graph becomes vertex perm[i] of the result.
  Graph relabeled(std::span<const VertexId> perm) const;

  /// Graph with the given edges added (or removed, for without_edges).
  Graph with_edges(std::span<const Edge> edges) const;
  Graph without_edges(std::span<const Edge> edges) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> adj_;
};

std::uint32_t degree(const Graph& g, VertexId v);

/// Degrees sorted in descending order.
std::vector<std::uint32_t> degree_sequence(const Graph& g);

bool is_connected(const Graph& g);

/// Largest shortest-path distance, or kInfiniteDiameter when disconnected.
std::uint32_t diameter(const Graph& g);

bool is_complete(const Graph& g);

/// L(G) = D(G) - A(G).
IntMatrix laplacian(const Graph& g);

// Basic constructors.
Graph complete(std::uint32_t n);
Graph complete_bipartite(std::uint32_t a, std::uint32_t b);
Graph path(std::uint32_t n);
Graph cycle(std::uint32_t n);
Graph star(std::uint32_t n);

}  // namespace snfgraph
