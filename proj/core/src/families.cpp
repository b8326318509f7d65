#include "tdec/families.hpp"

#include <charconv>

namespace tdec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParameterTooSmall, what);
}

int parse_int(std::string_view s, std::string_view ctx) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorKind::ParseError,
                "bad integer '" + std::string(s) + "' in family spec '" + std::string(ctx) + "'");
  return value;
}

}  // namespace

std::string FamilySpec::name() const {
  switch (family) {
    case Family::Path: return "path:" + std::to_string(a);
    case Family::Cycle: return "cycle:" + std::to_string(a);
    case Family::Complete: return "complete:" + std::to_string(a);
    case Family::CompleteBipartite:
      return "complete-bipartite:" + std::to_string(a) + "," + std::to_string(b);
    case Family::Star: return "star:" + std::to_string(a);
    case Family::Wheel: return "wheel:" + std::to_string(a);
    case Family::Friendship: return "friendship:" + std::to_string(a);
  }
  return "?";
}

FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::ParseError, "family spec '" + std::string(text) +
                                           "' missing ':<params>'");
  std::string_view name = text.substr(0, colon);
  std::string_view params = text.substr(colon + 1);
  FamilySpec spec{};
  if (name == "path") spec.family = Family::Path;
  else if (name == "cycle") spec.family = Family::Cycle;
  else if (name == "complete") spec.family = Family::Complete;
  else if (name == "complete-bipartite" || name == "bipartite")
    spec.family = Family::CompleteBipartite;
  else if (name == "star") spec.family = Family::Star;
  else if (name == "wheel") spec.family = Family::Wheel;
  else if (name == "friendship") spec.family = Family::Friendship;
  else
    throw Error(ErrorKind::ParseError, "unknown family '" + std::string(name) + "'");

  if (spec.family == Family::CompleteBipartite) {
    auto comma = params.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorKind::ParseError,
                  "complete-bipartite needs two parameters 'a,b', got '" + std::string(params) + "'");
    spec.a = parse_int(params.substr(0, comma), text);
    spec.b = parse_int(params.substr(comma + 1), text);
  } else {
    spec.a = parse_int(params, text);
  }
  return spec;
}

Graph gen_path(int n) {
  require(n >= 1, "path needs n >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph gen_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph gen_complete(int n) {
  require(n >= 1, "complete needs n >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph gen_complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete-bipartite needs a,b >= 1, got " + std::to_string(a) + "," +
                                std::to_string(b));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, std::move(edges));
}

Graph gen_star(int n) {
  require(n >= 1, "star needs n >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph(n + 1, std::move(edges));
}

Graph gen_wheel(int n) {
  // n total vertices: hub 0 plus the cycle 1..n-1. W_4 = K_4. The n=3 case
  // would need a 2-cycle and is rejected.
  require(n >= 4, "wheel needs n >= 4, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n - 1);
  return Graph(n, std::move(edges));
}

Graph gen_friendship(int n) {
  require(n >= 1, "friendship needs n >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    edges.emplace_back(0, a);
    edges.emplace_back(0, b);
    edges.emplace_back(a, b);
  }
  return Graph(2 * n + 1, std::move(edges));
}

Graph gen_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Path: return gen_path(spec.a);
    case Family::Cycle: return gen_cycle(spec.a);
    case Family::Complete: return gen_complete(spec.a);
    case Family::CompleteBipartite: return gen_complete_bipartite(spec.a, spec.b);
    case Family::Star: return gen_star(spec.a);
    case Family::Wheel: return gen_wheel(spec.a);
    case Family::Friendship: return gen_friendship(spec.a);
  }
  throw Error(ErrorKind::ParseError, "bad family enum");
}

}  // namespace tdec
