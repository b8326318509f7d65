#include "tdec/formats.hpp"

#include <charconv>
#include <sstream>

namespace tdec {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int_at(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    parse_fail(line, "bad integer '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto toks = split_ws(line);
    if (toks[0] == "p") {
      if (n >= 0) parse_fail(line_no, "duplicate header");
      if (toks.size() != 3) parse_fail(line_no, "header needs 'p <n> <m>'");
      n = parse_int_at(toks[1], line_no);
      m = parse_int_at(toks[2], line_no);
      if (n < 0 || m < 0) parse_fail(line_no, "negative size in header");
    } else if (toks[0] == "e") {
      if (n < 0) parse_fail(line_no, "edge before header");
      if (toks.size() != 3) parse_fail(line_no, "edge needs 'e <u> <v>'");
      if (static_cast<int>(edges.size()) >= m)
        parse_fail(line_no, "more than " + std::to_string(m) + " edges");
      edges.emplace_back(parse_int_at(toks[1], line_no), parse_int_at(toks[2], line_no));
    } else {
      parse_fail(line_no, "unknown line type '" + std::string(toks[0]) + "'");
    }
  }
  if (n < 0) parse_fail(line_no, "missing 'p <n> <m>' header");
  if (static_cast<int>(edges.size()) != m)
    parse_fail(line_no, "expected " + std::to_string(m) + " edges, got " +
                            std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

namespace {

constexpr int kG6Bias = 63;

// Bit t of the upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
std::vector<std::pair<int, int>> g6_pair_order(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return pairs;
}

Graph decode_graph6_line(std::string_view line, int line_no) {
  if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
  if (line.empty()) parse_fail(line_no, "empty graph6 record");
  size_t at = 0;
  auto next = [&]() -> int {
    if (at >= line.size()) parse_fail(line_no, "truncated graph6 record");
    int c = static_cast<unsigned char>(line[at++]) - kG6Bias;
    if (c < 0 || c > 63) parse_fail(line_no, "invalid graph6 byte at offset " + std::to_string(at - 1));
    return c;
  };
  long long n = next();
  if (n == 63) {
    int a = next();
    if (a == 63) parse_fail(line_no, "graph6 order >= 2^18 unsupported");
    n = (static_cast<long long>(a) << 12) | (next() << 6) | next();
  }
  long long bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  auto pairs = g6_pair_order(static_cast<int>(n));
  int buffer = 0, have = 0;
  for (long long t = 0; t < bits; ++t) {
    if (have == 0) {
      buffer = next();
      have = 6;
    }
    --have;
    if (buffer & (1 << have)) edges.push_back(pairs[static_cast<size_t>(t)]);
  }
  if (at != line.size()) parse_fail(line_no, "trailing bytes in graph6 record");
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

std::vector<Graph> parse_graph6(std::string_view text) {
  std::vector<Graph> graphs;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    graphs.push_back(decode_graph6_line(line, line_no));
  }
  return graphs;
}

std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
    out.push_back(static_cast<char>((n & 63) + kG6Bias));
  } else {
    throw Error(ErrorKind::SizeCapExceeded, "graph6 encoding capped at 258047 vertices");
  }
  auto pairs = g6_pair_order(n);
  int buffer = 0, have = 0;
  for (const auto& [i, j] : pairs) {
    buffer = (buffer << 1) | (g.has_edge(i, j) ? 1 : 0);
    if (++have == 6) {
      out.push_back(static_cast<char>(buffer + kG6Bias));
      buffer = 0;
      have = 0;
    }
  }
  if (have > 0) out.push_back(static_cast<char>((buffer << (6 - have)) + kG6Bias));
  return out;
}

}  // namespace tdec
