#ifndef TDEC_STRUCTURE_HPP
#define TDEC_STRUCTURE_HPP

#include <functional>
#include <vector>

#include "tdec/graph.hpp"

namespace tdec {

struct Components {
  std::vector<int> component_of;  // per vertex, ids by discovery order
  int count = 0;
  std::vector<std::vector<int>> groups() const;
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Tarjan lowpoint passes; the component-count definitions are kept as
/// property-test oracles against these.
std::vector<bool> find_bridges(const Graph& g);
std::vector<bool> find_cut_vertices(const Graph& g);
bool is_bridge(const Graph& g, int e);
bool is_cut_vertex(const Graph& g, int v);

inline constexpr int kDefaultInducedPathCap = 20;

/// Vertex count of a longest induced path, by exhaustive path extension.
int longest_induced_path(const Graph& g, int size_cap = kDefaultInducedPathCap);

inline constexpr int kMaxEnumerationVertices = 6;

/// Every labeled connected simple graph on exactly n vertices for n = 1..n_max,
/// each exactly once, in (n, edge-mask) order.
void enumerate_labeled_connected_graphs(int n_max, const std::function<void(const Graph&)>& fn);
std::vector<Graph> labeled_connected_graphs(int n_max);

}  // namespace tdec

#endif
