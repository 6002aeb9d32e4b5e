#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "snfgraph/graph.hpp"

namespace snfgraph {

inline constexpr std::uint32_t kMaxCanonicalOrder = 9;

/// Upper-triangle adjacency bits of a canonical relabeling. Bit
/// j*(j-1)/2 + i holds the pair (i, j), i < j, which is the column order
/// used by graph6.
struct CanonicalForm {
  std::uint32_t order = 0;
  std::uint64_t mask = 0;

  Graph to_graph() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.mask * 0x9E3779B97F4A7C15ULL ^ f.order);
  }
};

/// Edge-mask of g, no relabeling. Requires order <= 11.
std::uint64_t edge_mask(const Graph& g);

/// Minimum edge-mask over the vertex orderings compatible with the
/// isomorphism-invariant refined partition of g. Throws
/// std::invalid_argument above kMaxCanonicalOrder vertices.
CanonicalForm canonical_form(const Graph& g);

/// Canonically relabeled copy of g. Works for any order, but highly
/// symmetric graphs without twin vertices get expensive past ~10 vertices.
Graph canonical_graph(const Graph& g);

/// False whenever the orders differ.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace snfgraph
