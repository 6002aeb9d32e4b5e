#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "snfgraph/graph.hpp"

namespace snfgraph {

/// Named graph families. Labeled layouts (used by golden tests):
///
///   Complete               K_n on 0..n-1
///   CompleteMinusEdge      K_n minus {0,1}
///   PendantComplete        K_{n-1} on 0..n-2, vertex n-1 joined to 0
///   CompleteMinus2e        K_5 minus {0,1} and {2,3}
///   CompleteMinusC4        K_5 minus the cycle 0-1-2-3-0
///   CompleteMinusTriangle  K_n minus the triangle {0,1,2}
///   CompleteMinus2Triangles K_7 minus triangles {0,1,2} and {3,4,5}
///   CompleteMinusK33       K_7 minus all edges between {0,1,2} and {3,4,5};
///                          vertex 6 adjacent to everything
///   CompleteMinusP4        K_5 minus the path 0-1-2-3
///   CompleteBipartite23    parts {0,1} and {2,3,4}
///   CompleteBipartite33    parts {0,1,2} and {3,4,5}
///   Case7                  K_{n-1} on {0,1,3,..,n-1} minus {0,1}; vertex 2
///                          adjacent to 0 and 1 only
///   Path, Cycle, Star      0-1-...-(n-1); closed; centre 0
enum class Family {
  Complete,
  CompleteMinusEdge,
  PendantComplete,
  CompleteMinus2e,
  CompleteMinusC4,
  CompleteMinusTriangle,
  CompleteMinus2Triangles,
  CompleteMinusK33,
  CompleteMinusP4,
  CompleteBipartite23,
  CompleteBipartite33,
  Case7,
  Path,
  Cycle,
  Star,
};

std::span<const Family> all_families();

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// The order a fixed-size family requires, if any.
std::optional<std::uint32_t> fixed_order(Family f);

/// Smallest order for which the family is defined (and connected).
std::uint32_t min_order(Family f);

/// Throws std::invalid_argument when n is out of range for the family.
Graph family(Family f, std::uint32_t n);
Graph family(std::string_view name, std::uint32_t n);

// Shorthands for the families the s3 classification refers to.
Graph complete_minus_edge(std::uint32_t n);
Graph pendant_complete(std::uint32_t n);
Graph complete_minus_2e();
Graph complete_minus_c4();
Graph complete_minus_triangle(std::uint32_t n);
Graph complete_minus_2triangles();
Graph complete_minus_k33();
Graph complete_minus_p4();
Graph case7_family(std::uint32_t n);

}  // namespace snfgraph
