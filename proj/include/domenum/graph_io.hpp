#pragma once

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "domenum/errors.hpp"
#include "domenum/graph.hpp"

namespace domenum {

enum class GraphFormat { kDimacs, kPlain };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long to_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw FormatError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  std::optional<std::string_view> next() {
    if (pos >= text.size()) return std::nullopt;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    return line;
  }
};

class EdgeCollector {
public:
  void reset(long long n) { n_ = n; }

  void add(long long u, long long v, std::size_t line) {
    if (u == v) throw FormatError(line, "self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw FormatError(line, "vertex out of range");
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen_.insert(e).second) throw FormatError(line, "duplicate edge");
    edges_.push_back(e);
  }

  const std::vector<Edge>& edges() const { return edges_; }

private:
  long long n_ = 0;
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
};

inline Graph parse_dimacs(std::string_view text) {
  LineReader reader{text};
  std::optional<long long> n, m;
  std::size_t header_line = 0;
  EdgeCollector edges;
  while (auto line = reader.next()) {
    auto tok = split_ws(*line);
    if (tok.empty() || tok[0] == "c") continue;
    std::size_t ln = reader.line_no;
    if (tok[0] == "p") {
      if (n) throw FormatError(ln, "second problem line");
      if (tok.size() != 4 || tok[1] != "edge") throw FormatError(ln, "malformed header, expected 'p edge <n> <m>'");
      n = to_int(tok[2], ln);
      m = to_int(tok[3], ln);
      if (*n < 0 || *m < 0) throw FormatError(ln, "malformed header, negative count");
      header_line = ln;
      edges.reset(*n);
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw FormatError(ln, "malformed edge line");
      long long u = to_int(tok[1], ln), v = to_int(tok[2], ln);
      if (u == v) throw FormatError(ln, "self-loop on vertex " + std::to_string(u));
      if (!n) throw FormatError(ln, "edge before 'p edge' header");
      edges.add(u - 1, v - 1, ln);
    } else {
      throw FormatError(ln, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) throw FormatError(0, "missing 'p edge' header");
  if (static_cast<long long>(edges.edges().size()) != *m)
    throw FormatError(header_line, "malformed header, declares " + std::to_string(*m) + " edges but " +
                                       std::to_string(edges.edges().size()) + " were given");
  return Graph(static_cast<Vertex>(*n), edges.edges());
}

inline Graph parse_plain(std::string_view text) {
  LineReader reader{text};
  std::optional<long long> n, m;
  std::size_t header_line = 0;
  EdgeCollector edges;
  while (auto line = reader.next()) {
    auto tok = split_ws(*line);
    if (tok.empty() || tok[0].starts_with('#')) continue;
    std::size_t ln = reader.line_no;
    if (tok.size() != 2) throw FormatError(ln, "expected two integers");
    long long a = to_int(tok[0], ln), b = to_int(tok[1], ln);
    if (!n) {
      if (a < 0 || b < 0) throw FormatError(ln, "malformed header, negative count");
      n = a;
      m = b;
      header_line = ln;
      edges.reset(a);
    } else {
      edges.add(a, b, ln);
    }
  }
  if (!n) throw FormatError(0, "empty input");
  if (static_cast<long long>(edges.edges().size()) != *m)
    throw FormatError(header_line, "malformed header, declares " + std::to_string(*m) + " edges but " +
                                       std::to_string(edges.edges().size()) + " were given");
  return Graph(static_cast<Vertex>(*n), edges.edges());
}

}  // namespace detail

// Format of the first significant line: "c", "p" or "e" selects DIMACS,
// anything else the plain "<n> <m>" format.
inline GraphFormat detect_format(std::string_view text) {
  detail::LineReader reader{text};
  while (auto line = reader.next()) {
    auto tok = detail::split_ws(*line);
    if (tok.empty()) continue;
    if (tok[0] == "c" || tok[0] == "p" || tok[0] == "e") return GraphFormat::kDimacs;
    return GraphFormat::kPlain;
  }
  return GraphFormat::kPlain;
}

inline Graph parse_graph(std::string_view text) {
  return detect_format(text) == GraphFormat::kDimacs ? detail::parse_dimacs(text) : detail::parse_plain(text);
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kDimacs ? detail::parse_dimacs(text) : detail::parse_plain(text);
}

// Canonical forms: edges listed with the smaller endpoint first, sorted.
inline std::string serialize_graph(const Graph& g, GraphFormat format = GraphFormat::kDimacs) {
  std::ostringstream out;
  auto edges = g.edges();
  if (format == GraphFormat::kDimacs) {
    out << "p edge " << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  }
  return out.str();
}

}  // namespace domenum
