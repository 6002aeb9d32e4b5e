#include "snfgraph/io.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <vector>

namespace snfgraph {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::uint32_t kMaxGraph6Order = 258047;

std::string_view strip_line_end(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint32_t> parse_uint(std::string_view token) {
  std::uint32_t v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

// Incremental edge-list parser. Line numbers are reported as given.
class EdgeListBuilder {
 public:
  bool active() const { return order_.has_value(); }

  void start(std::string_view line, std::size_t line_no) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 2 || tokens[0] != "n") {
      throw ParseError("expected header 'n <count>'", line_no);
    }
    const auto n = parse_uint(tokens[1]);
    if (!n || *n == 0 || *n > kMaxOrder) {
      throw ParseError("vertex count must be an integer in [1, 64]", line_no);
    }
    order_ = *n;
    edges_.clear();
  }

  void add(std::string_view line, std::size_t line_no) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError("malformed edge line '" + std::string(line) + "'", line_no);
    const auto u = parse_uint(tokens[0]);
    const auto v = parse_uint(tokens[1]);
    if (!u || !v) throw ParseError("malformed edge line '" + std::string(line) + "'", line_no);
    if (*u >= *order_ || *v >= *order_) {
      throw ParseError("vertex index out of range in '" + std::string(line) + "'", line_no);
    }
    if (*u == *v) throw ParseError("self-loop at vertex " + std::to_string(*u), line_no);
    edges_.emplace_back(*u, *v);
  }

  Graph finish() {
    Graph g = Graph::from_edges(*order_, edges_);
    order_.reset();
    edges_.clear();
    return g;
  }

  void reset() {
    order_.reset();
    edges_.clear();
  }

 private:
  std::optional<std::uint32_t> order_;
  std::vector<Edge> edges_;
};

bool is_header_line(std::string_view line) {
  const auto tokens = split_ws(line);
  return !tokens.empty() && tokens[0] == "n";
}

bool skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::string_view s = strip_line_end(line);
  if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
  if (s.empty()) throw ParseError("empty graph6 record");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6 byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                       " is outside [63, 126]");
    }
  }
  auto value = [&](std::size_t i) { return static_cast<std::uint32_t>(s[i]) - 63; };

  std::uint32_t n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else {
    if (s.size() > 1 && value(1) == 63) {
      throw ParseError("graph6 orders above 258047 are not supported");
    }
    if (s.size() < 4) throw ParseError("truncated graph6 order field");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6 order 0 is not supported");
  if (n > kMaxOrder) {
    throw ParseError("graph order " + std::to_string(n) + " exceeds the limit of 64");
  }

  const std::size_t bits = std::size_t{n} * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() - pos < bytes) throw ParseError("truncated graph6 adjacency data");
  if (s.size() - pos > bytes) throw ParseError("trailing bytes after graph6 record");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i, ++k) {
      if ((value(pos + k / 6) >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((value(pos + k / 6) >> (5 - k % 6)) & 1U) {
      throw ParseError("nonzero padding bits in graph6 record");
    }
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::uint32_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  unsigned group = 0;
  unsigned filled = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  EdgeListBuilder builder;
  std::optional<Graph> result;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = strip_line_end(
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    ++line_no;
    if (!skippable(line)) {
      if (!builder.active()) {
        if (result) throw ParseError("more than one graph in edge list", line_no);
        builder.start(line, line_no);
      } else if (is_header_line(line)) {
        throw ParseError("more than one graph in edge list", line_no);
      } else {
        builder.add(line, line_no);
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (!builder.active()) throw ParseError("missing header 'n <count>'", line_no ? line_no : 1);
  return builder.finish();
}

std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

InputFormat format_from_extension(std::string_view path) {
  if (path.ends_with(".g6")) return InputFormat::Graph6;
  if (path.ends_with(".el")) return InputFormat::EdgeList;
  throw std::invalid_argument("cannot infer input format from '" + std::string(path) +
                              "' (expected .g6 or .el)");
}

InputFormat format_from_name(std::string_view name) {
  if (name == "g6" || name == "graph6") return InputFormat::Graph6;
  if (name == "edges" || name == "el") return InputFormat::EdgeList;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

void read_graphs(std::istream& in, InputFormat format, std::string_view source_name,
                 const std::function<void(const GraphRecord&)>& sink,
                 const ReadOptions& options) {
  auto fail = [&](const ParseError& e) {
    if (!options.lenient) throw e;
    if (options.on_error) options.on_error(e);
  };
  auto source = [&](std::size_t line_no) {
    return std::string(source_name) + ":" + std::to_string(line_no);
  };

  std::string raw;
  std::size_t line_no = 0;
  if (format == InputFormat::Graph6) {
    while (std::getline(in, raw)) {
      ++line_no;
      const auto line = strip_line_end(raw);
      if (trim(line).empty()) continue;
      try {
        sink(GraphRecord{source(line_no), parse_graph6(line)});
      } catch (const ParseError& e) {
        fail(ParseError(e.what(), line_no));
      }
    }
    return;
  }

  EdgeListBuilder builder;
  std::size_t graph_line = 0;
  bool skipping = false;
  auto flush = [&] {
    if (builder.active()) sink(GraphRecord{source(graph_line), builder.finish()});
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_line_end(raw);
    if (skippable(line)) continue;
    try {
      if (is_header_line(line)) {
        flush();
        skipping = false;
        graph_line = line_no;
        builder.start(line, line_no);
      } else if (skipping) {
        continue;
      } else if (!builder.active()) {
        throw ParseError("expected header 'n <count>'", line_no);
      } else {
        builder.add(line, line_no);
      }
    } catch (const ParseError& e) {
      builder.reset();
      skipping = true;
      fail(e);
    }
  }
  flush();
}

}  // namespace snfgraph
