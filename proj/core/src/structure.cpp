#include "tdec/structure.hpp"

#include <algorithm>
#include <string>

namespace tdec {

std::vector<std::vector<int>> Components::groups() const {
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < static_cast<int>(component_of.size()); ++v)
    out[component_of[v]].push_back(v);
  return out;
}

Components connected_components(const Graph& g) {
  int n = g.vertex_count();
  Components comps;
  comps.component_of.assign(n, -1);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (comps.component_of[root] >= 0) continue;
    int id = comps.count++;
    comps.component_of[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(u)) {
        if (comps.component_of[nb.vertex] < 0) {
          comps.component_of[nb.vertex] = id;
          stack.push_back(nb.vertex);
        }
      }
    }
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

namespace {

struct LowpointDfs {
  const Graph& g;
  std::vector<int> disc, low, parent_edge;
  std::vector<bool> bridge, cut;
  int timer = 0;

  explicit LowpointDfs(const Graph& g)
      : g(g),
        disc(g.vertex_count(), -1),
        low(g.vertex_count(), 0),
        parent_edge(g.vertex_count(), -1),
        bridge(g.edge_count(), false),
        cut(g.vertex_count(), false) {}

  void run(int root) {
    disc[root] = low[root] = timer++;
    int root_children = 0;
    // explicit stack: (vertex, neighbor index)
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      if (idx < g.neighbors(u).size()) {
        const auto& nb = g.neighbors(u)[idx++];
        if (nb.edge == parent_edge[u]) continue;
        if (disc[nb.vertex] < 0) {
          parent_edge[nb.vertex] = nb.edge;
          disc[nb.vertex] = low[nb.vertex] = timer++;
          if (u == root) ++root_children;
          stack.push_back({nb.vertex, 0});
        } else {
          low[u] = std::min(low[u], disc[nb.vertex]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[u]);
          if (low[u] > disc[p]) bridge[parent_edge[u]] = true;
          if (p != root && low[u] >= disc[p]) cut[p] = true;
        }
      }
    }
    if (root_children >= 2) cut[root] = true;
  }
};

}  // namespace

std::vector<bool> find_bridges(const Graph& g) {
  LowpointDfs dfs(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dfs.disc[v] < 0) dfs.run(v);
  return dfs.bridge;
}

std::vector<bool> find_cut_vertices(const Graph& g) {
  LowpointDfs dfs(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dfs.disc[v] < 0) dfs.run(v);
  return dfs.cut;
}

bool is_bridge(const Graph& g, int e) {
  g.edge(e);  // range check
  return find_bridges(g)[e];
}

bool is_cut_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  return find_cut_vertices(g)[v];
}

namespace {

struct InducedPathSearch {
  const Graph& g;
  std::vector<bool> in_path;
  std::vector<bool> blocked;  // adjacent to a non-tip path vertex
  std::vector<int> path;
  int best = 0;

  explicit InducedPathSearch(const Graph& g)
      : g(g), in_path(g.vertex_count(), false), blocked(g.vertex_count(), false) {}

  void extend(int tip) {
    best = std::max(best, static_cast<int>(path.size()));
    for (const auto& nb : g.neighbors(tip)) {
      int w = nb.vertex;
      if (in_path[w] || blocked[w]) continue;
      // w may touch only the current tip
      path.push_back(w);
      in_path[w] = true;
      std::vector<int> newly_blocked;
      for (const auto& nb2 : g.neighbors(tip))
        if (!blocked[nb2.vertex] && nb2.vertex != w) {
          blocked[nb2.vertex] = true;
          newly_blocked.push_back(nb2.vertex);
        }
      extend(w);
      for (int x : newly_blocked) blocked[x] = false;
      in_path[w] = false;
      path.pop_back();
    }
  }
};

}  // namespace

int longest_induced_path(const Graph& g, int size_cap) {
  int n = g.vertex_count();
  if (n > size_cap)
    throw Error(ErrorKind::SizeCapExceeded, "induced path search capped at " +
                                                std::to_string(size_cap) + " vertices, got " +
                                                std::to_string(n));
  if (n == 0) return 0;
  InducedPathSearch search(g);
  int best = 1;
  for (int start = 0; start < n; ++start) {
    search.path = {start};
    search.in_path[start] = true;
    search.extend(start);
    search.in_path[start] = false;
    best = std::max(best, search.best);
  }
  return best;
}

void enumerate_labeled_connected_graphs(int n_max,
                                        const std::function<void(const Graph&)>& fn) {
  if (n_max > kMaxEnumerationVertices)
    throw Error(ErrorKind::SizeCapExceeded, "labeled enumeration capped at " +
                                                std::to_string(kMaxEnumerationVertices) +
                                                " vertices");
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int bits = static_cast<int>(pairs.size());
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (int b = 0; b < bits; ++b)
        if (mask >> b & 1u) edges.push_back(pairs[b]);
      Graph g(n, std::move(edges));
      if (is_connected(g)) fn(g);
    }
  }
}

std::vector<Graph> labeled_connected_graphs(int n_max) {
  std::vector<Graph> out;
  enumerate_labeled_connected_graphs(n_max, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace tdec
