#include <algorithm>
#include <cctype>
#include <string>
#include <tuple>
#include <vector>

#include "boss/error.hpp"
#include "boss/graph.hpp"

namespace boss {

namespace {

std::string header(const std::vector<std::string>& names) {
  std::string out = "Graph Nodes:\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ';';
    out += names[i];
  }
  out += "\n\nGraph Edges:\n";
  return out;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  // A trailing newline leaves one empty pseudo-line behind.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct EdgeLine {
  std::size_t line;
  std::string from;
  std::string to;
  bool directed;
};

struct ParsedText {
  std::vector<std::string> names;
  std::vector<EdgeLine> edges;
};

ParsedText parse_text(std::string_view text) {
  const auto lines = split_lines(text);
  ParsedText out;
  std::size_t i = 0;
  if (lines.empty() || trim(lines[0]) != "Graph Nodes:") {
    throw ParseError(1, "expected 'Graph Nodes:'");
  }
  if (lines.size() < 2) throw ParseError(2, "missing node list");
  const std::string node_line = trim(lines[1]);
  if (!node_line.empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t end = node_line.find(';', start);
      std::string name = trim(std::string_view(node_line).substr(
          start, end == std::string::npos ? std::string::npos : end - start));
      if (name.empty()) throw ParseError(2, "empty node name");
      if (std::find(out.names.begin(), out.names.end(), name) != out.names.end()) {
        throw ParseError(2, "duplicate node name '" + name + "'");
      }
      out.names.push_back(std::move(name));
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }
  i = 2;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i >= lines.size() || trim(lines[i]) != "Graph Edges:") {
    throw ParseError(i + 1, "expected 'Graph Edges:'");
  }
  ++i;
  for (std::size_t expected = 1; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    const std::size_t dot = line.find(". ");
    if (dot == std::string::npos) throw ParseError(i + 1, "malformed edge line '" + line + "'");
    const std::string number = line.substr(0, dot);
    if (number.empty() ||
        !std::all_of(number.begin(), number.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError(i + 1, "malformed edge number '" + number + "'");
    }
    if (std::stoul(number) != expected) {
      throw ParseError(i + 1, "edge number " + number + " out of sequence");
    }
    ++expected;
    const std::string body = line.substr(dot + 2);
    bool directed = true;
    std::size_t arrow = body.find(" --> ");
    if (arrow == std::string::npos) {
      arrow = body.find(" --- ");
      directed = false;
    }
    if (arrow == std::string::npos) throw ParseError(i + 1, "malformed edge '" + body + "'");
    EdgeLine e{i + 1, trim(body.substr(0, arrow)), trim(body.substr(arrow + 5)), directed};
    if (e.from.empty() || e.to.empty()) throw ParseError(i + 1, "malformed edge '" + body + "'");
    for (const auto* endpoint : {&e.from, &e.to}) {
      if (std::find(out.names.begin(), out.names.end(), *endpoint) == out.names.end()) {
        throw ParseError(i + 1, "unknown node '" + *endpoint + "'");
      }
    }
    out.edges.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::string format_graph_text(const Dag& g) {
  std::string out = header(g.names());
  std::size_t k = 1;
  for (auto [a, b] : g.edges()) {
    out += std::to_string(k++) + ". " + g.name(a) + " --> " + g.name(b) + "\n";
  }
  return out;
}

std::string format_graph_text(const Cpdag& g) {
  // Merge directed and undirected edges, ordered by endpoint pair.
  std::vector<std::tuple<Node, Node, bool>> all;
  for (auto [a, b] : g.directed()) all.emplace_back(a, b, true);
  for (auto [a, b] : g.undirected()) all.emplace_back(a, b, false);
  std::sort(all.begin(), all.end());
  std::string out = header(g.names());
  std::size_t k = 1;
  for (auto [a, b, directed] : all) {
    out += std::to_string(k++) + ". " + g.name(a) + (directed ? " --> " : " --- ") + g.name(b) +
           "\n";
  }
  return out;
}

Dag parse_graph_text(std::string_view text) {
  ParsedText parsed = parse_text(text);
  Dag g(parsed.names);
  for (const auto& e : parsed.edges) {
    if (!e.directed) throw ParseError(e.line, "undirected edge in a DAG");
    const Node a = g.index_of(e.from);
    const Node b = g.index_of(e.to);
    if (a == b) throw ParseError(e.line, "self loop on '" + e.from + "'");
    if (g.adjacent(a, b)) throw ParseError(e.line, "duplicate edge " + e.from + " -- " + e.to);
    if (g.reaches(b, a)) {
      throw ParseError(e.line, "edge " + e.from + " --> " + e.to + " creates a cycle");
    }
    g.add_edge(a, b);
  }
  return g;
}

Cpdag parse_cpdag_text(std::string_view text) {
  ParsedText parsed = parse_text(text);
  Cpdag g(parsed.names);
  for (const auto& e : parsed.edges) {
    const Node a = g.index_of(e.from);
    const Node b = g.index_of(e.to);
    if (a == b) throw ParseError(e.line, "self loop on '" + e.from + "'");
    if (g.adjacent(a, b)) throw ParseError(e.line, "duplicate edge " + e.from + " -- " + e.to);
    if (e.directed) {
      g.add_directed(a, b);
    } else {
      g.add_undirected(a, b);
    }
  }
  return g;
}

}  // namespace boss
