#include "snfgraph/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>

namespace snfgraph {

namespace {

constexpr std::uint64_t bit(std::uint32_t v) { return std::uint64_t{1} << v; }

constexpr std::uint32_t pair_index(std::uint32_t i, std::uint32_t j) {
  return j * (j - 1) / 2 + i;
}

// Ordered partition of the vertex set, one bitmask per cell.
using Cells = std::vector<std::uint64_t>;

// Colour refinement to an equitable partition. Each cell splits by the
// number of neighbours a vertex has in every current cell; the pieces are
// ordered by that count vector, so the result depends on g and the input
// partition only, never on vertex names.
void refine(const Graph& g, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    Cells next;
    next.reserve(g.order());
    for (std::uint64_t cell : cells) {
      if (std::popcount(cell) == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<std::uint8_t>, std::uint64_t> pieces;
      for (std::uint64_t rest = cell; rest; rest &= rest - 1) {
        const auto v = static_cast<std::uint32_t>(std::countr_zero(rest));
        std::vector<std::uint8_t> signature(cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k) {
          signature[k] = static_cast<std::uint8_t>(std::popcount(g.neighbours(v) & cells[k]));
        }
        pieces[std::move(signature)] |= bit(v);
      }
      if (pieces.size() > 1) changed = true;
      for (const auto& [signature, piece] : pieces) next.push_back(piece);
    }
    cells = std::move(next);
  }
}

bool twins(const Graph& g, std::uint32_t u, std::uint32_t v) {
  return (g.neighbours(u) & ~bit(v)) == (g.neighbours(v) & ~bit(u));
}

// Explores the individualization-refinement tree and keeps the leaf whose
// key is smallest. Sibling branches on twin vertices are skipped: swapping
// two twins is an automorphism fixing the current partition, so their
// subtrees yield the same keys.
template <typename Key, typename KeyFn>
class LeafSearch {
 public:
  LeafSearch(const Graph& g, KeyFn key_fn) : g_(g), key_fn_(std::move(key_fn)) {}

  void run() {
    Cells cells{g_.order() == 64 ? ~std::uint64_t{0} : bit(g_.order()) - 1};
    refine(g_, cells);
    descend(std::move(cells));
  }

  const Key& best_key() const { return *best_; }
  const std::vector<VertexId>& best_labels() const { return best_labels_; }

 private:
  void descend(Cells cells) {
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](std::uint64_t c) { return std::popcount(c) > 1; });
    if (target == cells.end()) {
      visit_leaf(cells);
      return;
    }
    const auto pos = static_cast<std::size_t>(target - cells.begin());
    const std::uint64_t cell = *target;
    std::vector<std::uint32_t> tried;
    for (std::uint64_t rest = cell; rest; rest &= rest - 1) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(rest));
      if (std::any_of(tried.begin(), tried.end(),
                      [&](std::uint32_t u) { return twins(g_, u, v); })) {
        continue;
      }
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(pos));
      child.push_back(bit(v));
      child.push_back(cell & ~bit(v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cells.end());
      refine(g_, child);
      descend(std::move(child));
    }
  }

  void visit_leaf(const Cells& cells) {
    std::vector<VertexId> labels(g_.order());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      labels[static_cast<std::size_t>(std::countr_zero(cells[k]))] = static_cast<VertexId>(k);
    }
    Key key = key_fn_(labels);
    if (!best_ || key < *best_) {
      best_ = std::move(key);
      best_labels_ = std::move(labels);
    }
  }

  const Graph& g_;
  KeyFn key_fn_;
  std::optional<Key> best_;
  std::vector<VertexId> best_labels_;
};

template <typename Key, typename KeyFn>
LeafSearch<Key, KeyFn> make_search(const Graph& g, KeyFn fn) {
  return LeafSearch<Key, KeyFn>(g, std::move(fn));
}

}  // namespace

std::uint64_t edge_mask(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("edge mask needs order <= 11");
  std::uint64_t mask = 0;
  for (const auto& [u, v] : g.edges()) mask |= bit(pair_index(u, v));
  return mask;
}

Graph CanonicalForm::to_graph() const {
  std::vector<Edge> edges;
  for (std::uint32_t j = 1; j < order; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      if ((mask >> pair_index(i, j)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(order, edges);
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical_form supports at most " +
                                std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                                std::to_string(g.order()));
  }
  const auto edges = g.edges();
  auto search = make_search<std::uint64_t>(g, [&](const std::vector<VertexId>& labels) {
    std::uint64_t mask = 0;
    for (const auto& [u, v] : edges) {
      const auto a = labels[u];
      const auto b = labels[v];
      mask |= bit(a < b ? pair_index(a, b) : pair_index(b, a));
    }
    return mask;
  });
  search.run();
  return CanonicalForm{g.order(), search.best_key()};
}

Graph canonical_graph(const Graph& g) {
  auto search = make_search<std::vector<std::uint64_t>>(
      g, [&](const std::vector<VertexId>& labels) { return g.relabeled(labels).rows(); });
  search.run();
  return g.relabeled(search.best_labels());
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  if (g.order() <= kMaxCanonicalOrder) return canonical_form(g) == canonical_form(h);
  return canonical_graph(g) == canonical_graph(h);
}

}  // namespace snfgraph
