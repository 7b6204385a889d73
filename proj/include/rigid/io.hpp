#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rigid/graph.hpp"

namespace rigid {

/// Malformed input, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Graph or multigraph as read from a file.
///
/// Two encodings are accepted:
///
///   text:  `n <count>` header, optional `kind graph|multigraph`,
///          optional `name <id> <label>` lines, then one `u v` pair per line;
///          `#` starts a comment.
///   json:  {"kind": "graph", "n": 4, "edges": [[0,1], ...], "names": [...]}
///
/// Both are validated at parse time: no loops, endpoints < n, unique names and,
/// for kind graph, no repeated pairs.
struct GraphDocument {
  enum class Kind { Graph, Multigraph };

  Kind kind = Kind::Graph;
  int n = 0;
  std::vector<Edge> edges;         // multigraph: position is the edge id
  std::vector<std::string> names;  // empty, or one per vertex

  Graph to_graph() const;
  Multigraph to_multigraph() const;

  /// Vertex from a decimal id or a declared name. Throws InvalidArgument.
  Vertex resolve(std::string_view token) const;
  std::string label(Vertex v) const;

  /// Sorted edges for graphs; multigraph edge order is significant and kept.
  GraphDocument canonical() const;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument parse_document(std::string_view text);
GraphDocument read_document(const std::string& path);

std::string to_text(const GraphDocument& doc);
std::string to_json(const GraphDocument& doc);

}  // namespace rigid
