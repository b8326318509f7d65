#include "tdec/bounds.hpp"

#include <algorithm>
#include <limits>

#include <nlohmann/json.hpp>

namespace tdec {

using json = nlohmann::ordered_json;

int path_formula(int n) {
  if (n < 3) throw Error(ErrorKind::PathTooShort, "path_formula needs n >= 3");
  static constexpr int table[] = {2, 2, 3, 4, 4, 5};  // n = 3..8
  if (n <= 8) return table[n - 3];
  switch (n % 4) {
    case 1: return 2 * ((n - 1) / 4) + 2;
    case 2: return 2 * ((n - 2) / 4) + 3;
    case 3: return 2 * ((n - 3) / 4) + 4;
    default: return 2 * ((n - 4) / 4) + 4;
  }
}

int cycle_formula(int n) {
  if (n < 3) throw Error(ErrorKind::CycleTooShort, "cycle_formula needs n >= 3");
  static constexpr int table[] = {3, 2, 4, 4, 5};  // n = 3..7
  if (n <= 7) return table[n - 3];
  switch (n % 4) {
    case 0: return 2 * (n / 4) + 2;
    case 1: return 2 * ((n - 1) / 4) + 3;
    case 2: return 2 * ((n - 2) / 4) + 4;
    default: return 2 * ((n - 3) / 4) + 4;
  }
}

int family_value(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Star:
      if (spec.a < 2) throw Error(ErrorKind::ParameterTooSmall, "star value needs n >= 2");
      return spec.a;
    case Family::Wheel:
      if (spec.a < 4) throw Error(ErrorKind::ParameterTooSmall, "wheel value needs n >= 4");
      return spec.a - 1;
    case Family::Friendship:
      if (spec.a < 2) throw Error(ErrorKind::ParameterTooSmall, "friendship value needs n >= 2");
      return 2 * spec.a;
    default:
      throw std::logic_error("family_value: no exact closed form for " + spec.name());
  }
}

std::optional<int> closed_form_value(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Path: return spec.a >= 3 ? std::optional(path_formula(spec.a)) : std::nullopt;
    case Family::Cycle: return spec.a >= 3 ? std::optional(cycle_formula(spec.a)) : std::nullopt;
    case Family::Star: return spec.a >= 2 ? std::optional(spec.a) : std::nullopt;
    case Family::Wheel: return spec.a >= 4 ? std::optional(spec.a - 1) : std::nullopt;
    case Family::Friendship: return spec.a >= 2 ? std::optional(2 * spec.a) : std::nullopt;
    default: return std::nullopt;
  }
}

std::pair<int, int> complete_bounds(int order) {
  if (order < 3) throw Error(ErrorKind::ParameterTooSmall, "complete_bounds needs order >= 3");
  if (order % 2 == 0) {
    int t = order / 2;
    return {2 * t - 1, 4 * t - 2};
  }
  int t = (order - 1) / 2;
  return {2 * t, 4 * t - 1};
}

std::pair<int, int> bipartite_bounds(int a, int b) {
  if (a < 1 || b < 1 || (a == 1 && b == 1))
    throw Error(ErrorKind::ParameterTooSmall, "bipartite_bounds needs a,b >= 1 and (a,b) != (1,1)");
  if (a == b) return {a, 2 * a};
  return {std::max(a, b), a + b - 1};
}

int delta_lower_bound(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorKind::EmptyGraph, "graph has no edges");
  return g.max_degree();
}

int induced_path_lower_bound(const Graph& g, int size_cap) {
  int delta = g.max_degree();
  int longest = longest_induced_path(g, size_cap);
  if (longest >= 6) return delta + path_formula(longest - 2);
  return delta;
}

void BoundsReport::finalize() {
  best_lower = 0;
  for (const auto& b : lower) best_lower = std::max(best_lower, b.value);
  best_upper = -1;
  for (const auto& b : upper)
    best_upper = best_upper < 0 ? b.value : std::min(best_upper, b.value);
}

BoundsReport subdivision_bounds(int m, int delta, int k) {
  if (k < 2) throw Error(ErrorKind::InvalidK, "subdivision bounds need k >= 2");
  if (m < 1 || delta < 1)
    throw Error(ErrorKind::ParameterTooSmall, "subdivision bounds need m >= 1 and delta >= 1");
  BoundsReport report;
  report.lower.push_back({path_formula(k + 1), "subdiv-sandwich-lower"});
  if (k >= 3) report.lower.push_back({m, "subdiv-lower-m"});
  if (k >= 10) {
    report.lower.push_back({m * (path_formula(k - 1) - 2) + 2, "subdiv-k10-lower"});
    report.lower.push_back({subdivision_lower_piecewise(m, k), "subdiv-k10-lower-mod4"});
  }
  report.upper.push_back({m * path_formula(k + 1), "subdiv-sandwich-upper"});
  if (k >= 10) {
    report.upper.push_back({m * (path_formula(k + 1) - 2) + delta, "subdiv-k10-upper"});
    report.upper.push_back({subdivision_upper_piecewise(m, delta, k), "subdiv-k10-upper-mod4"});
  }
  report.finalize();
  return report;
}

BoundsReport subdivision_bounds_for(const Graph& g, int k) {
  if (g.edge_count() == 0) throw Error(ErrorKind::EmptyGraph, "graph has no edges");
  return subdivision_bounds(g.edge_count(), g.max_degree(), k);
}

int subdivision_lower_piecewise(int m, int k) {
  if (k < 10) throw Error(ErrorKind::InvalidK, "piecewise lower bound needs k >= 10");
  switch (k % 4) {
    case 0: return m * (k / 2) + 2;
    case 1: return m * ((k - 1) / 2) + 2;
    case 2: return m * ((k - 2) / 2) + 2;
    default: return m * ((k - 1) / 2) + 2;
  }
}

int subdivision_upper_piecewise(int m, int delta, int k) {
  if (k < 10) throw Error(ErrorKind::InvalidK, "piecewise upper bound needs k >= 10");
  switch (k % 4) {
    case 0: return m * k / 2 + delta;
    case 1: return m * ((k + 1) / 2) + delta;
    case 2: return m * ((k + 2) / 2) + delta;
    default: return m * ((k + 1) / 2) + delta;
  }
}

std::pair<int, int> surgery_interval(SurgeryKind kind, int base_value, int degree_param) {
  switch (kind) {
    case SurgeryKind::EdgeRemoval: return {base_value - 2, base_value + 2};
    case SurgeryKind::VertexRemoval:
      return {base_value - degree_param, base_value + degree_param};
    case SurgeryKind::Contraction: return {base_value - 2, base_value + degree_param - 1};
  }
  throw std::logic_error("bad surgery kind");
}

BoundsReport bounds_for_graph(const Graph& g, int induced_cap) {
  BoundsReport report;
  if (g.edge_count() == 0) {
    report.finalize();
    return report;
  }
  report.lower.push_back({g.max_degree(), "delta-lower"});
  if (is_connected(g) && g.vertex_count() <= induced_cap &&
      longest_induced_path(g, induced_cap) >= 6)
    report.lower.push_back({g.max_degree() + 2, "induced-p6-lower"});
  bool every_edge_has_neighbor = true;
  for (const auto& [u, v] : g.edges())
    if (g.degree(u) + g.degree(v) <= 2) {
      every_edge_has_neighbor = false;
      break;
    }
  if (every_edge_has_neighbor)
    report.upper.push_back({g.edge_count(), "all-distinct-upper"});
  report.finalize();
  return report;
}

std::string bounds_to_json(const BoundsReport& report) {
  json j;
  j["lower"] = json::array();
  for (const auto& b : report.lower) j["lower"].push_back({{"value", b.value}, {"theorem", b.theorem}});
  j["upper"] = json::array();
  for (const auto& b : report.upper) j["upper"].push_back({{"value", b.value}, {"theorem", b.theorem}});
  j["best_lower"] = report.best_lower;
  j["best_upper"] = report.best_upper;
  return j.dump(2);
}

}  // namespace tdec
