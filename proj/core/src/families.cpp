#include "snfgraph/families.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace snfgraph {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::uint32_t min_order;
  std::optional<std::uint32_t> fixed;
};

constexpr std::array kFamilies{
    FamilyInfo{Family::Complete, "complete", 1, std::nullopt},
    FamilyInfo{Family::CompleteMinusEdge, "complete_minus_edge", 5, std::nullopt},
    FamilyInfo{Family::PendantComplete, "pendant_complete", 5, std::nullopt},
    FamilyInfo{Family::CompleteMinus2e, "complete_minus_2e", 5, 5},
    FamilyInfo{Family::CompleteMinusC4, "complete_minus_c4", 5, 5},
    FamilyInfo{Family::CompleteMinusTriangle, "complete_minus_triangle", 5, std::nullopt},
    FamilyInfo{Family::CompleteMinus2Triangles, "complete_minus_2triangles", 7, 7},
    FamilyInfo{Family::CompleteMinusK33, "complete_minus_k33", 7, 7},
    FamilyInfo{Family::CompleteMinusP4, "complete_minus_p4", 5, 5},
    FamilyInfo{Family::CompleteBipartite23, "complete_bipartite_2_3", 5, 5},
    FamilyInfo{Family::CompleteBipartite33, "complete_bipartite_3_3", 6, 6},
    FamilyInfo{Family::Case7, "case7_family", 5, std::nullopt},
    FamilyInfo{Family::Path, "path", 1, std::nullopt},
    FamilyInfo{Family::Cycle, "cycle", 3, std::nullopt},
    FamilyInfo{Family::Star, "star", 2, std::nullopt},
};

constexpr std::array kAllFamilies = [] {
  std::array<Family, kFamilies.size()> out{};
  for (std::size_t i = 0; i < kFamilies.size(); ++i) out[i] = kFamilies[i].family;
  return out;
}();

const FamilyInfo& info(Family f) {
  for (const auto& entry : kFamilies) {
    if (entry.family == f) return entry;
  }
  throw std::invalid_argument("unknown family");
}

void check_order(Family f, std::uint32_t n) {
  const auto& entry = info(f);
  if (entry.fixed && n != *entry.fixed) {
    throw std::invalid_argument(std::string(entry.name) + " is only defined for n = " +
                                std::to_string(*entry.fixed));
  }
  if (n < entry.min_order || n > kMaxOrder) {
    throw std::invalid_argument(std::string(entry.name) + " needs " +
                                std::to_string(entry.min_order) + " <= n <= 64, got " +
                                std::to_string(n));
  }
}

Graph complete_minus(std::uint32_t n, std::initializer_list<Edge> removed) {
  return complete(n).without_edges(std::span<const Edge>(removed.begin(), removed.size()));
}

}  // namespace

std::span<const Family> all_families() { return kAllFamilies; }

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& entry : kFamilies) {
    if (entry.name == name) return entry.family;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> fixed_order(Family f) { return info(f).fixed; }

std::uint32_t min_order(Family f) { return info(f).min_order; }

Graph family(Family f, std::uint32_t n) {
  check_order(f, n);
  switch (f) {
    case Family::Complete:
      return complete(n);
    case Family::CompleteMinusEdge:
      return complete_minus(n, {{0, 1}});
    case Family::PendantComplete: {
      std::vector<Edge> removed;
      for (VertexId v = 1; v + 1 < n; ++v) removed.emplace_back(v, n - 1);
      return complete(n).without_edges(removed);
    }
    case Family::CompleteMinus2e:
      return complete_minus(5, {{0, 1}, {2, 3}});
    case Family::CompleteMinusC4:
      return complete_minus(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case Family::CompleteMinusTriangle:
      return complete_minus(n, {{0, 1}, {1, 2}, {0, 2}});
    case Family::CompleteMinus2Triangles:
      return complete_minus(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    case Family::CompleteMinusK33:
      return complete_minus(7, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                {2, 3}, {2, 4}, {2, 5}});
    case Family::CompleteMinusP4:
      return complete_minus(5, {{0, 1}, {1, 2}, {2, 3}});
    case Family::CompleteBipartite23:
      return complete_bipartite(2, 3);
    case Family::CompleteBipartite33:
      return complete_bipartite(3, 3);
    case Family::Case7: {
      std::vector<Edge> edges;
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
          if (u == 2 || v == 2 || (u == 0 && v == 1)) continue;
          edges.emplace_back(u, v);
        }
      }
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 2);
      return Graph::from_edges(n, edges);
    }
    case Family::Path:
      return path(n);
    case Family::Cycle:
      return cycle(n);
    case Family::Star:
      return star(n);
  }
  throw std::invalid_argument("unknown family");
}

Graph family(std::string_view name, std::uint32_t n) {
  auto f = family_from_name(name);
  if (!f) throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  return family(*f, n);
}

Graph complete_minus_edge(std::uint32_t n) { return family(Family::CompleteMinusEdge, n); }
Graph pendant_complete(std::uint32_t n) { return family(Family::PendantComplete, n); }
Graph complete_minus_2e() { return family(Family::CompleteMinus2e, 5); }
Graph complete_minus_c4() { return family(Family::CompleteMinusC4, 5); }
Graph complete_minus_triangle(std::uint32_t n) {
  return family(Family::CompleteMinusTriangle, n);
}
Graph complete_minus_2triangles() { return family(Family::CompleteMinus2Triangles, 7); }
Graph complete_minus_k33() { return family(Family::CompleteMinusK33, 7); }
Graph complete_minus_p4() { return family(Family::CompleteMinusP4, 5); }
Graph case7_family(std::uint32_t n) { return family(Family::Case7, n); }

}  // namespace snfgraph
