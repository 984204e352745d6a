#pragma once

// Text formats.  Vertices and bags are 1-indexed on disk.
//
//   graph:        c <comment>            orientation:  <tail> <head>
//                 p wpo <n> <m>
//                 <u> <v> <w>
//
//   decomposition (PACE .td):  s td <bags> <max bag size> <n>
//                              b <i> <v...>
//                              <i> <j>
//
// The first bag of a decomposition file is taken as its root.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wpo/graph.hpp"
#include "wpo/tree_decomposition.hpp"

namespace wpo {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  /// 1-based line number, 0 when the problem is not tied to one line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') {
      ++i;
    }
    if (i > start) {
      out.push_back(s.substr(start, i - start));
    }
  }
  return out;
}

// Reads every non-blank line; comment lines ('c') are returned separately.
class LineReader {
 public:
  explicit LineReader(std::istream& in) {
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      storage_.push_back(raw);
      numbers_.push_back(number);
    }
    for (std::size_t i = 0; i < storage_.size(); ++i) {
      auto tokens = split_ws(storage_[i]);
      if (tokens.empty()) {
        continue;
      }
      if (tokens[0] == "c") {
        const std::string& s = storage_[i];
        const std::size_t at = s.find('c');
        std::string text = s.substr(at + 1);
        if (!text.empty() && text.front() == ' ') {
          text.erase(0, 1);
        }
        while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) {
          text.pop_back();
        }
        comments_.push_back(text);
        continue;
      }
      lines_.push_back({numbers_[i], std::move(tokens)});
    }
  }

  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<std::string>& comments() const { return comments_; }
  std::size_t last_line() const { return numbers_.empty() ? 0 : numbers_.back(); }

 private:
  std::vector<std::string> storage_;
  std::vector<std::size_t> numbers_;
  std::vector<Line> lines_;
  std::vector<std::string> comments_;
};

inline std::uint64_t parse_uint(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, std::string(what) + " '" + std::string(token) + "' is out of range");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string(what) + " '" + std::string(token) + "' is not a non-negative integer");
  }
  return value;
}

inline Vertex parse_vertex(std::string_view token, std::size_t line, std::size_t n) {
  const std::uint64_t v = parse_uint(token, line, "vertex");
  if (v < 1 || v > n) {
    throw ParseError(line, "vertex " + std::string(token) + " is outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

inline std::pair<Vertex, Vertex> unordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace detail

struct GraphFile {
  WeightedGraph graph;
  std::vector<std::string> comments;
};

inline GraphFile read_graph(std::istream& in) {
  detail::LineReader reader(in);
  const auto& lines = reader.lines();
  if (lines.empty()) {
    throw ParseError(reader.last_line(), "missing 'p wpo <n> <m>' header");
  }
  const detail::Line& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "p" || header.tokens[1] != "wpo") {
    throw ParseError(header.number, "expected header 'p wpo <n> <m>'");
  }
  const std::uint64_t n = detail::parse_uint(header.tokens[2], header.number, "vertex count");
  const std::uint64_t m = detail::parse_uint(header.tokens[3], header.number, "edge count");
  if (n >= kNoVertex) {
    throw ParseError(header.number, "vertex count too large");
  }
  if (lines.size() - 1 != m) {
    throw ParseError(lines.size() - 1 < m ? reader.last_line() : lines[m + 1].number,
                     "header declares " + std::to_string(m) + " edges but the file has " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<std::pair<Vertex, Vertex>> seen;
  Weight total = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const detail::Line& line = lines[i];
    if (line.tokens.size() != 3) {
      throw ParseError(line.number, "expected '<u> <v> <w>'");
    }
    const Vertex u = detail::parse_vertex(line.tokens[0], line.number, n);
    const Vertex v = detail::parse_vertex(line.tokens[1], line.number, n);
    const Weight w = detail::parse_uint(line.tokens[2], line.number, "weight");
    if (u == v) {
      throw ParseError(line.number, "self-loop at vertex " + std::to_string(u + 1));
    }
    if (w == 0) {
      throw ParseError(line.number, "weight must be positive");
    }
    if (!seen.insert(detail::unordered(u, v)).second) {
      throw ParseError(line.number, "duplicate edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
    }
    try {
      total = checked_add(total, w);
    } catch (const std::overflow_error&) {
      throw ParseError(line.number, "total edge weight overflows 64 bits");
    }
    edges.push_back({u, v, w});
  }
  return {WeightedGraph(n, std::move(edges)), reader.comments()};
}

inline GraphFile read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const WeightedGraph& g, const std::vector<std::string>& comments = {}) {
  for (const std::string& c : comments) {
    out << "c " << c << '\n';
  }
  out << "p wpo " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
  }
}

/// One arc per edge, any order, matched to edges as unordered pairs.
inline Orientation read_orientation(std::istream& in, const WeightedGraph& g) {
  detail::LineReader reader(in);
  std::map<std::pair<Vertex, Vertex>, EdgeId> index;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    index[detail::unordered(g.edge(e).u, g.edge(e).v)] = e;
  }
  Orientation d(g.num_edges());
  std::vector<bool> given(g.num_edges(), false);
  for (const detail::Line& line : reader.lines()) {
    if (line.tokens.size() != 2) {
      throw ParseError(line.number, "expected '<tail> <head>'");
    }
    const Vertex tail = detail::parse_vertex(line.tokens[0], line.number, g.num_vertices());
    const Vertex head = detail::parse_vertex(line.tokens[1], line.number, g.num_vertices());
    const auto it = index.find(detail::unordered(tail, head));
    if (it == index.end()) {
      throw ParseError(line.number, "arc " + std::to_string(tail + 1) + "->" + std::to_string(head + 1) +
                                        " is not an edge of the graph");
    }
    if (given[it->second]) {
      throw ParseError(line.number, "edge {" + std::to_string(tail + 1) + "," + std::to_string(head + 1) +
                                        "} is oriented twice");
    }
    given[it->second] = true;
    d.point_to(g, it->second, head);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!given[e]) {
      throw ParseError(0, "incomplete orientation: edge {" + std::to_string(g.edge(e).u + 1) + "," +
                              std::to_string(g.edge(e).v + 1) + "} has no arc");
    }
  }
  return d;
}

inline void write_orientation(std::ostream& out, const WeightedGraph& g, const Orientation& d) {
  require_covers(g, d);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << d.tail(g, e) + 1 << ' ' << d.head(g, e) + 1 << '\n';
  }
}

/// Reads a PACE .td file; `n` is the vertex count of the companion graph.
inline TreeDecomposition read_td(std::istream& in, std::size_t n) {
  detail::LineReader reader(in);
  const auto& lines = reader.lines();
  if (lines.empty()) {
    throw ParseError(reader.last_line(), "missing 's td <bags> <max bag size> <n>' header");
  }
  const detail::Line& header = lines.front();
  if (header.tokens.size() != 5 || header.tokens[0] != "s" || header.tokens[1] != "td") {
    throw ParseError(header.number, "expected header 's td <bags> <max bag size> <n>'");
  }
  const std::uint64_t bags = detail::parse_uint(header.tokens[2], header.number, "bag count");
  const std::uint64_t max_size = detail::parse_uint(header.tokens[3], header.number, "max bag size");
  const std::uint64_t vertices = detail::parse_uint(header.tokens[4], header.number, "vertex count");
  if (vertices != n) {
    throw ParseError(header.number, "decomposition is for " + std::to_string(vertices) +
                                        " vertices but the graph has " + std::to_string(n));
  }
  if (bags == 0 && n > 0) {
    throw ParseError(header.number, "decomposition has no bags");
  }
  if (bags > lines.size()) {
    throw ParseError(header.number, "bag count exceeds the file length");
  }
  TreeDecomposition td;
  td.bags.resize(bags);
  std::vector<bool> defined(bags, false);
  std::size_t widest = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const detail::Line& line = lines[i];
    if (line.tokens[0] == "b") {
      if (line.tokens.size() < 2) {
        throw ParseError(line.number, "expected 'b <i> <v...>'");
      }
      const std::uint64_t b = detail::parse_uint(line.tokens[1], line.number, "bag index");
      if (b < 1 || b > bags) {
        throw ParseError(line.number, "bag index " + std::string(line.tokens[1]) + " is outside 1.." +
                                          std::to_string(bags));
      }
      if (defined[b - 1]) {
        throw ParseError(line.number, "bag " + std::to_string(b) + " is defined twice");
      }
      defined[b - 1] = true;
      Bag bag;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        bag.push_back(detail::parse_vertex(line.tokens[t], line.number, n));
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError(line.number, "bag " + std::to_string(b) + " repeats a vertex");
      }
      widest = std::max(widest, bag.size());
      td.bags[b - 1] = std::move(bag);
    } else {
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "expected 'b <i> <v...>' or '<i> <j>'");
      }
      const std::uint64_t a = detail::parse_uint(line.tokens[0], line.number, "bag index");
      const std::uint64_t b = detail::parse_uint(line.tokens[1], line.number, "bag index");
      if (a < 1 || a > bags || b < 1 || b > bags) {
        throw ParseError(line.number, "tree edge names a bag outside 1.." + std::to_string(bags));
      }
      td.tree_edges.emplace_back(a - 1, b - 1);
    }
  }
  for (std::size_t b = 0; b < bags; ++b) {
    if (!defined[b]) {
      throw ParseError(0, "bag " + std::to_string(b + 1) + " is never defined");
    }
  }
  if (widest != max_size) {
    throw ParseError(header.number, "header declares max bag size " + std::to_string(max_size) +
                                        " but the largest bag has " + std::to_string(widest));
  }
  td.root = 0;
  return td;
}

inline void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t n) {
  std::size_t widest = 0;
  for (const Bag& b : td.bags) {
    widest = std::max(widest, b.size());
  }
  // The root goes first so that reading the file back keeps it.
  std::vector<std::size_t> order(td.bags.size());
  std::vector<std::size_t> rank(td.bags.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  if (!order.empty()) {
    std::swap(order[0], order[td.root]);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
  }
  out << "s td " << td.bags.size() << ' ' << widest << ' ' << n << '\n';
  for (std::size_t i = 0; i < order.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[order[i]]) {
      out << ' ' << v + 1;
    }
    out << '\n';
  }
  for (const auto& [a, b] : td.tree_edges) {
    out << rank[a] + 1 << ' ' << rank[b] + 1 << '\n';
  }
}

}  // namespace wpo
