#include "rigid/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rigid {

namespace {

using json = nlohmann::json;

bool parse_int(std::string_view token, long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

// Shared structural validation; `where` maps an edge index to a position.
template <typename Where>
void validate(const GraphDocument& doc, Where where) {
  std::set<Edge> seen;
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const Edge& e = doc.edges[i];
    auto [line, col] = where(i);
    if (e.u < 0 || e.v >= doc.n) throw ParseError(line, col, "edge endpoint out of range");
    if (e.u == e.v) throw ParseError(line, col, "loop at vertex " + std::to_string(e.u));
    if (doc.kind == GraphDocument::Kind::Graph && !seen.insert(e).second)
      throw ParseError(line, col, "repeated edge in a simple graph");
  }
  if (!doc.names.empty()) {
    std::set<std::string> unique(doc.names.begin(), doc.names.end());
    if (doc.names.size() != static_cast<std::size_t>(doc.n) || unique.size() != doc.names.size() ||
        unique.count(""))
      throw ParseError(1, 1, "vertex names must be unique and given for every vertex");
  }
}

GraphDocument parse_text(std::string_view text) {
  GraphDocument doc;
  bool have_n = false;
  std::vector<std::pair<int, int>> positions;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    auto tokens = split(line);
    if (tokens.empty()) continue;
    const auto& head = tokens.front();

    if (head.text == "n") {
      long n = 0;
      if (have_n) throw ParseError(line_no, head.column, "duplicate 'n' header");
      if (tokens.size() != 2 || !parse_int(tokens[1].text, n) || n < 0)
        throw ParseError(line_no, tokens.size() > 1 ? tokens[1].column : head.column, "expected 'n <count>'");
      doc.n = static_cast<int>(n);
      have_n = true;
    } else if (head.text == "kind") {
      if (tokens.size() != 2 || (tokens[1].text != "graph" && tokens[1].text != "multigraph"))
        throw ParseError(line_no, head.column, "expected 'kind graph' or 'kind multigraph'");
      doc.kind = tokens[1].text == "graph" ? GraphDocument::Kind::Graph : GraphDocument::Kind::Multigraph;
    } else if (head.text == "name") {
      long id = 0;
      if (!have_n) throw ParseError(line_no, head.column, "'name' before 'n' header");
      if (tokens.size() != 3 || !parse_int(tokens[1].text, id) || id < 0 || id >= doc.n)
        throw ParseError(line_no, head.column, "expected 'name <id> <label>'");
      if (doc.names.empty()) doc.names.assign(static_cast<std::size_t>(doc.n), "");
      if (!doc.names[static_cast<std::size_t>(id)].empty())
        throw ParseError(line_no, tokens[1].column, "vertex named twice");
      doc.names[static_cast<std::size_t>(id)] = std::string(tokens[2].text);
    } else {
      if (!have_n) throw ParseError(line_no, head.column, "edge before 'n' header");
      long a = 0, b = 0;
      if (!parse_int(head.text, a)) throw ParseError(line_no, head.column, "expected vertex id");
      if (tokens.size() < 2 || !parse_int(tokens[1].text, b))
        throw ParseError(line_no, tokens.size() > 1 ? tokens[1].column : head.column + static_cast<int>(head.text.size()),
                         "expected second vertex id");
      if (tokens.size() > 2) throw ParseError(line_no, tokens[2].column, "trailing input");
      if (a < 0 || b < 0 || a >= doc.n || b >= doc.n)
        throw ParseError(line_no, (a < 0 || a >= doc.n) ? head.column : tokens[1].column, "edge endpoint out of range");
      doc.edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      if (a == b) throw ParseError(line_no, head.column, "loop at vertex " + std::to_string(a));
      positions.emplace_back(line_no, head.column);
    }
  }
  if (!have_n) throw ParseError(line_no, 1, "missing 'n <count>' header");
  validate(doc, [&](std::size_t i) { return positions[i]; });
  return doc;
}

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

GraphDocument parse_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    auto [line, col] = line_column(text, err.byte > 0 ? err.byte - 1 : 0);
    throw ParseError(line, col, "malformed JSON");
  }
  GraphDocument doc;
  try {
    const std::string kind = root.value("kind", std::string("graph"));
    if (kind == "graph")
      doc.kind = GraphDocument::Kind::Graph;
    else if (kind == "multigraph")
      doc.kind = GraphDocument::Kind::Multigraph;
    else
      throw ParseError(1, 1, "unknown kind '" + kind + "'");
    doc.n = root.at("n").get<int>();
    if (doc.n < 0) throw ParseError(1, 1, "negative vertex count");
    for (const auto& pair : root.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError(1, 1, "edges must be [u, v] pairs");
      doc.edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      if (pair[0].get<int>() == pair[1].get<int>())
        throw ParseError(1, 1, "loop at vertex " + std::to_string(pair[0].get<int>()));
    }
    if (root.contains("names")) doc.names = root.at("names").get<std::vector<std::string>>();
  } catch (const json::exception& err) {
    throw ParseError(1, 1, std::string("invalid document: ") + err.what());
  }
  validate(doc, [](std::size_t) { return std::pair{1, 1}; });
  return doc;
}

}  // namespace

Graph GraphDocument::to_graph() const {
  if (kind != Kind::Graph) {
    // A multigraph without repeated pairs is still a simple graph.
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionViolation("document has parallel edges; a simple graph is required");
  }
  return Graph(n, edges);
}

Multigraph GraphDocument::to_multigraph() const { return Multigraph(n, edges); }

Vertex GraphDocument::resolve(std::string_view token) const {
  if (!names.empty()) {
    auto it = std::find(names.begin(), names.end(), token);
    if (it != names.end()) return static_cast<Vertex>(it - names.begin());
  }
  long id = 0;
  if (parse_int(token, id) && id >= 0 && id < n) return static_cast<Vertex>(id);
  throw InvalidArgument("unknown vertex '" + std::string(token) + "'");
}

std::string GraphDocument::label(Vertex v) const {
  return names.empty() ? std::to_string(v) : names[static_cast<std::size_t>(v)];
}

GraphDocument GraphDocument::canonical() const {
  GraphDocument out = *this;
  if (kind == Kind::Graph) std::sort(out.edges.begin(), out.edges.end());
  return out;
}

GraphDocument parse_document(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

GraphDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string to_text(const GraphDocument& doc) {
  std::ostringstream out;
  out << "n " << doc.n << '\n';
  out << "kind " << (doc.kind == GraphDocument::Kind::Graph ? "graph" : "multigraph") << '\n';
  for (std::size_t i = 0; i < doc.names.size(); ++i) out << "name " << i << ' ' << doc.names[i] << '\n';
  for (const Edge& e : doc.edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_json(const GraphDocument& doc) {
  json root;
  root["kind"] = doc.kind == GraphDocument::Kind::Graph ? "graph" : "multigraph";
  root["n"] = doc.n;
  root["edges"] = json::array();
  for (const Edge& e : doc.edges) root["edges"].push_back({e.u, e.v});
  if (!doc.names.empty()) root["names"] = doc.names;
  return root.dump();
}

}  // namespace rigid
