#include "plybasis/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "plybasis/errors.hpp"

namespace plybasis {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > j) out.push_back(line.substr(j, i - j));
  }
  return out;
}

bool is_comment(const std::vector<std::string_view>& tok) { return !tok.empty() && tok[0] == "c"; }

long to_int(std::string_view s, int line) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<long> declared_n;
  std::optional<long> declared_m;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  long max_label = 0;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const auto tok = tokens(lines[i]);
    if (tok.empty() || is_comment(tok)) continue;
    if (tok[0] == "p") {
      if (declared_n || !edges.empty()) throw ParseError(line, "header must come first and only once");
      if (tok.size() != 4 || tok[1] != "edge") throw ParseError(line, "expected 'p edge <n> <m>'");
      declared_n = to_int(tok[2], line);
      declared_m = to_int(tok[3], line);
      if (*declared_n < 0 || *declared_m < 0) throw ParseError(line, "negative size in header");
      continue;
    }
    if (tok[0] != "e" || tok.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
    const long u = to_int(tok[1], line);
    const long v = to_int(tok[2], line);
    if (u < 1 || v < 1) throw ParseError(line, "vertex labels start at 1");
    if (declared_n && (u > *declared_n || v > *declared_n)) throw ParseError(line, "vertex label exceeds header count");
    if (u > (1L << 30) || v > (1L << 30)) throw ParseError(line, "vertex label too large");
    if (u == v) throw ParseError(line, "self-loop on vertex " + std::to_string(u));
    const std::pair<int, int> key{static_cast<int>(std::min(u, v) - 1), static_cast<int>(std::max(u, v) - 1)};
    if (!seen.insert(key).second) {
      throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    max_label = std::max({max_label, u, v});
  }
  if (declared_m && static_cast<std::size_t>(*declared_m) != edges.size()) {
    throw ParseError(static_cast<int>(lines.size()), "header declares " + std::to_string(*declared_m) +
                                                         " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(declared_n.value_or(max_label)), std::move(edges));
}

std::string emit_graph(const Graph& g) {
  std::vector<std::pair<int, int>> list;
  for (const Edge& e : g.edges()) list.push_back(std::minmax(e.u, e.v));
  std::sort(list.begin(), list.end());
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : list) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

PathDecomposition parse_decomposition(std::string_view text, int vertex_count) {
  std::vector<std::vector<int>> bags;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const auto tok = tokens(lines[i]);
    if (is_comment(tok)) continue;
    std::vector<int> bag;
    for (auto t : tok) {
      const long v = to_int(t, line);
      if (v < 1 || v > vertex_count) throw ParseError(line, "vertex label " + std::string(t) + " out of range");
      bag.push_back(static_cast<int>(v - 1));
    }
    bags.push_back(std::move(bag));
  }
  return PathDecomposition(std::move(bags));
}

std::string emit_decomposition(const PathDecomposition& d) {
  std::ostringstream out;
  for (const auto& bag : d.bags()) {
    for (std::size_t j = 0; j < bag.size(); ++j) out << (j ? " " : "") << bag[j] + 1;
    out << '\n';
  }
  return out.str();
}

GeneratingSet parse_basis(std::string_view text, int edge_count) {
  GeneratingSet out(static_cast<std::size_t>(edge_count));
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const auto tok = tokens(lines[i]);
    if (tok.empty() || is_comment(tok)) continue;
    EdgeSet x(static_cast<std::size_t>(edge_count));
    for (auto t : tok) {
      const long e = to_int(t, line);
      if (e < 0 || e >= edge_count) throw ParseError(line, "edge id " + std::string(t) + " out of range");
      if (x.test(static_cast<std::size_t>(e))) throw ParseError(line, "edge id " + std::string(t) + " repeated");
      x.set(static_cast<std::size_t>(e));
    }
    out.add(std::move(x), "file");
  }
  return out;
}

std::string emit_basis(const GeneratingSet& basis) {
  std::ostringstream out;
  for (const EdgeSet& x : basis.elements()) {
    bool first = true;
    x.for_each([&](int e) {
      out << (first ? "" : " ") << e;
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace plybasis
