#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "snfgraph/analysis.hpp"
#include "snfgraph/enumerate.hpp"
#include "snfgraph/graph.hpp"

namespace snfgraph {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  /// 1-based, 0 when unknown.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// graph6 decoding. A leading ">>graph6<<" header is stripped; a trailing
/// '\n' or "\r\n" is tolerated. Nonzero padding bits are rejected so that
/// emit_graph6 reproduces the input exactly.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// "n <count>" followed by one "u v" line per edge, 0-based. Blank lines
/// and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

/// Edges sorted lexicographically, one per line, trailing newline.
std::string emit_edge_list(const Graph& g);

struct GraphRecord {
  std::string source;
  Graph graph;
};

enum class InputFormat { Graph6, EdgeList };

/// .g6 -> Graph6, .el -> EdgeList; throws std::invalid_argument otherwise.
InputFormat format_from_extension(std::string_view path);
InputFormat format_from_name(std::string_view name);

struct ReadOptions {
  /// Report bad records through on_error and keep going.
  bool lenient = false;
  std::function<void(const ParseError&)> on_error;
};

/// Streams every graph in `in`. graph6 input holds one graph per line; an
/// edge-list stream may hold several graphs, each starting at an "n" line.
/// Throws ParseError on the first bad record unless lenient.
void read_graphs(std::istream& in, InputFormat format, std::string_view source_name,
                 const std::function<void(const GraphRecord&)>& sink,
                 const ReadOptions& options = {});

}  // namespace snfgraph
