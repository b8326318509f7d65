#include "tdec/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include <nlohmann/json.hpp>

#include "tdec/line_graph.hpp"

namespace tdec {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

bool tde_feasible(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    if (g.degree(u) + g.degree(v) <= 2) return false;
  return true;
}

namespace {

struct TimeoutReached {};

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

/// Backtracking search for a TDE-coloring with at most k classes.
///
/// State per edge e: potential_[e] is the set of colors that could still end
/// up dominating e — colors whose current members are all adjacent to e and
/// which are nonempty or can still gain an adjacent member. This is an
/// optimistic superset of the truly achievable dominators, so pruning on an
/// empty set never cuts a completable branch; at a leaf it is exact.
class Search {
public:
  Search(const Graph& g, int k, const std::vector<int>& order, Clock::time_point deadline,
         SolveStats* stats)
      : m_(g.edge_count()),
        k_(k),
        order_(order),
        deadline_(deadline),
        stats_(stats),
        adj_(m_, 0),
        color_(m_, -1),
        potential_(m_, 0),
        forbidden_(m_, 0),
        class_mask_(k, 0),
        nb_count_(m_),
        unassigned_adj_(m_, 0) {
    for (int e = 0; e < m_; ++e) nb_count_[e].fill(0);
    const std::uint64_t all_colors = k_ >= 64 ? ~std::uint64_t{0} : bit(k_) - 1;
    for (int e = 0; e < m_; ++e) {
      auto [u, v] = g.edges()[e];
      for (const auto& nb : g.neighbors(u))
        if (nb.edge != e) adj_[e] |= bit(nb.edge);
      for (const auto& nb : g.neighbors(v))
        if (nb.edge != e) adj_[e] |= bit(nb.edge);
      unassigned_adj_[e] = std::popcount(adj_[e]);
      potential_[e] = all_colors;
    }
  }

  bool run() { return dfs(0); }

  /// Greedy pass: first color per edge that keeps properness and every
  /// potential set nonempty; no backtracking. Nullopt when stuck.
  std::optional<std::vector<int>> greedy() {
    for (int depth = 0; depth < m_; ++depth) {
      int f = order_[depth];
      bool placed = false;
      int limit = std::min(used_colors_, k_ - 1);
      for (int c = 0; c <= limit && !placed; ++c) {
        if (forbidden_[f] >> c & 1) continue;
        size_t mark = trail_.size();
        if (assign(f, c)) placed = true;
        else undo(f, c, mark);
      }
      if (!placed) return std::nullopt;
    }
    return color_;
  }

  const std::vector<int>& witness() const { return color_; }
  int used_colors() const { return used_colors_; }

private:
  bool dfs(int depth) {
    if (depth == m_) return true;
    int f = order_[depth];
    const int limit = std::min(used_colors_, k_ - 1);
    for (int c = 0; c <= limit; ++c) {
      if (forbidden_[f] >> c & 1) continue;
      if (stats_) {
        ++stats_->nodes_explored;
        stats_->peak_depth = std::max(stats_->peak_depth, depth + 1);
        if ((stats_->nodes_explored & 4095) == 0 && Clock::now() > deadline_)
          throw TimeoutReached{};
      }
      size_t mark = trail_.size();
      if (assign(f, c) && dfs(depth + 1)) return true;
      undo(f, c, mark);
    }
    return false;
  }

  bool assign(int f, int c) {
    color_[f] = c;
    if (class_mask_[c] == 0) ++used_colors_;
    class_mask_[c] |= bit(f);
    // A class containing an edge not adjacent to e can never dominate e
    // (this also removes c from f's own potential set).
    for (int e = 0; e < m_; ++e) {
      if ((potential_[e] >> c & 1) && !(adj_[e] >> f & 1)) {
        trail_.push_back({e, potential_[e]});
        potential_[e] &= ~bit(c);
      }
    }
    std::uint64_t nbs = adj_[f];
    while (nbs) {
      int e = std::countr_zero(nbs);
      nbs &= nbs - 1;
      ++nb_count_[e][c];
      forbidden_[e] |= bit(c);
      if (--unassigned_adj_[e] == 0) {
        // no unassigned neighbor left: still-empty classes can't help e
        std::uint64_t empty = 0;
        for (int cc = 0; cc < k_; ++cc)
          if (class_mask_[cc] == 0) empty |= bit(cc);
        if (potential_[e] & empty) {
          trail_.push_back({e, potential_[e]});
          potential_[e] &= ~empty;
        }
      }
    }
    for (int e = 0; e < m_; ++e)
      if (potential_[e] == 0) return false;
    if (used_colors_ == k_) {
      // no color can open anymore; an unassigned edge with every class
      // forbidden is a proper-coloring dead end
      for (int e = 0; e < m_; ++e)
        if (color_[e] < 0 && std::popcount(forbidden_[e]) == k_) return false;
    }
    return true;
  }

  void undo(int f, int c, size_t mark) {
    while (trail_.size() > mark) {
      potential_[trail_.back().edge] = trail_.back().old;
      trail_.pop_back();
    }
    std::uint64_t nbs = adj_[f];
    while (nbs) {
      int e = std::countr_zero(nbs);
      nbs &= nbs - 1;
      if (--nb_count_[e][c] == 0) forbidden_[e] &= ~bit(c);
      ++unassigned_adj_[e];
    }
    class_mask_[c] &= ~bit(f);
    if (class_mask_[c] == 0) --used_colors_;
    color_[f] = -1;
  }

  int m_, k_;
  const std::vector<int>& order_;
  Clock::time_point deadline_;
  SolveStats* stats_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> color_;
  std::vector<std::uint64_t> potential_, forbidden_, class_mask_;
  std::vector<std::array<std::uint8_t, 64>> nb_count_;
  std::vector<int> unassigned_adj_;
  int used_colors_ = 0;
  struct Saved {
    int edge;
    std::uint64_t old;
  };
  std::vector<Saved> trail_;
};

std::vector<int> branch_order(const Graph& g, BranchOrder order) {
  std::vector<int> out(g.edge_count());
  std::iota(out.begin(), out.end(), 0);
  if (order == BranchOrder::LineDegreeDesc) {
    std::vector<int> line_degree(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      line_degree[e] = g.degree(u) + g.degree(v) - 2;
    }
    std::stable_sort(out.begin(), out.end(),
                     [&](int a, int b) { return line_degree[a] > line_degree[b]; });
  }
  return out;
}

EdgeColoring all_distinct_coloring(const Graph& g) {
  std::vector<int> colors(g.edge_count());
  std::iota(colors.begin(), colors.end(), 0);
  return EdgeColoring(g.edge_count(), std::move(colors));
}

void check_witness(const Graph& g, const EdgeColoring& w, int expected_classes) {
  TdeReport report = validate(g, w);
  if (!report.valid() || w.class_count() != expected_classes)
    throw std::logic_error("solver produced an invalid witness");
}

}  // namespace

std::pair<int, EdgeColoring> heuristic_upper(const Graph& g) {
  if (!tde_feasible(g)) throw Error(ErrorKind::InfeasibleGraph, "graph has a lone-edge component");
  const int m = g.edge_count();
  if (m == 0) return {0, EdgeColoring()};
  if (m > kMaxSolveEdges)
    throw Error(ErrorKind::SizeCapExceeded, "solver capped at " + std::to_string(kMaxSolveEdges) +
                                                " edges, got " + std::to_string(m));
  auto order = branch_order(g, BranchOrder::LineDegreeDesc);
  Search search(g, std::min(m, kMaxSolveEdges), order, Clock::time_point::max(), nullptr);
  if (auto colors = search.greedy()) {
    EdgeColoring result(search.used_colors(), *colors);
    if (validate(g, result).valid()) return {result.class_count(), result};
  }
  return {m, all_distinct_coloring(g)};
}

SolveResult solve_exact(const Graph& g, const SolverOptions& opts) {
  const auto start = Clock::now();
  const auto deadline = start + opts.timeout;
  SolveResult result;
  const int m = g.edge_count();

  auto finish = [&](SolveResult r) {
    r.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
  };

  if (m == 0) {
    result.status = SolveStatus::Exact;
    result.value = 0;
    result.witness = EdgeColoring();
    return finish(std::move(result));
  }
  if (!tde_feasible(g)) {
    result.status = SolveStatus::Infeasible;
    return finish(std::move(result));
  }
  if (m > kMaxSolveEdges)
    throw Error(ErrorKind::SizeCapExceeded, "solver capped at " + std::to_string(kMaxSolveEdges) +
                                                " edges, got " + std::to_string(m));

  auto order = branch_order(g, opts.branching_order);
  auto [heuristic_k, heuristic_witness] = heuristic_upper(g);
  int lower = std::max({1, g.max_degree(), opts.initial_lower.value_or(1)});

  for (int k = lower;; ++k) {
    if (k >= heuristic_k) {
      result.status = SolveStatus::Exact;
      result.value = heuristic_k;
      result.witness = heuristic_witness;
      result.proven_lower = result.proven_upper = heuristic_k;
      break;
    }
    Search search(g, k, order, deadline, &result.stats);
    try {
      if (search.run()) {
        EdgeColoring witness(search.used_colors(), search.witness());
        result.status = SolveStatus::Exact;
        result.value = witness.class_count();
        result.witness = std::move(witness);
        result.proven_lower = result.proven_upper = *result.value;
        break;
      }
    } catch (const TimeoutReached&) {
      result.status = SolveStatus::TimedOut;
      result.proven_lower = k;
      result.proven_upper = heuristic_k;
      result.witness = heuristic_witness;
      return finish(std::move(result));
    }
  }

  check_witness(g, *result.witness, *result.value);
  if (opts.oracle_cross_check && m <= kMaxOracleEdges) {
    auto oracle = solve_oracle_enumeration(g, m);
    if (!oracle || *oracle != *result.value)
      throw std::logic_error("solve_exact disagrees with the enumeration oracle");
  }
  return finish(std::move(result));
}

namespace {

/// Restricted growth strings over m items with exactly k blocks; calls fn for
/// each and stops early when fn returns true.
bool for_each_partition(int m, int k, std::vector<int>& colors,
                        const std::function<bool(const std::vector<int>&)>& fn, int i = 0,
                        int max_used = -1) {
  if (i == m) return max_used + 1 == k && fn(colors);
  if (max_used + 1 + (m - i) < k) return false;  // cannot reach k blocks
  for (int c = 0; c <= std::min(max_used + 1, k - 1); ++c) {
    colors[i] = c;
    if (for_each_partition(m, k, colors, fn, i + 1, std::max(max_used, c))) return true;
  }
  return false;
}

}  // namespace

std::optional<int> solve_oracle_enumeration(const Graph& g, int k_max) {
  const int m = g.edge_count();
  if (m > kMaxOracleEdges)
    throw Error(ErrorKind::SizeCapExceeded, "enumeration oracle capped at " +
                                                std::to_string(kMaxOracleEdges) + " edges");
  if (m == 0) return 0;
  std::vector<int> colors(m);
  for (int k = 1; k <= std::min(k_max, m); ++k) {
    bool found = for_each_partition(m, k, colors, [&](const std::vector<int>& cs) {
      return validate(g, EdgeColoring(k, cs)).valid();
    });
    if (found) return k;
  }
  return std::nullopt;
}

std::optional<int> solve_oracle_line_graph(const Graph& g, int k_max) {
  const int m = g.edge_count();
  if (m > kMaxOracleEdges)
    throw Error(ErrorKind::SizeCapExceeded, "line-graph oracle capped at " +
                                                std::to_string(kMaxOracleEdges) + " edges");
  if (m == 0) return 0;
  Graph lg = line_graph(g);
  const int n = lg.vertex_count();

  // Total dominator vertex coloring check, written against L(G)'s vertex
  // adjacency only.
  auto is_td_coloring = [&](const std::vector<int>& colors, int k) {
    for (const auto& [u, v] : lg.edges())
      if (colors[u] == colors[v]) return false;
    std::vector<std::vector<int>> classes(k);
    for (int v = 0; v < n; ++v) classes[colors[v]].push_back(v);
    for (int v = 0; v < n; ++v) {
      bool dominated = false;
      for (int c = 0; c < k && !dominated; ++c) {
        if (classes[c].empty()) continue;
        bool all = true;
        for (int w : classes[c])
          if (w == v || !lg.has_edge(std::min(v, w), std::max(v, w))) {
            all = false;
            break;
          }
        dominated = all;
      }
      if (!dominated) return false;
    }
    return true;
  };

  std::vector<int> colors(n);
  for (int k = 1; k <= std::min(k_max, n); ++k) {
    bool found = for_each_partition(
        n, k, colors, [&](const std::vector<int>& cs) { return is_td_coloring(cs, k); });
    if (found) return k;
  }
  return std::nullopt;
}

std::string solve_result_to_json(const SolveResult& result) {
  json j;
  switch (result.status) {
    case SolveStatus::Exact: j["status"] = "exact"; break;
    case SolveStatus::Infeasible: j["status"] = "infeasible"; break;
    case SolveStatus::TimedOut: j["status"] = "timed-out"; break;
  }
  j["value"] = result.value ? json(*result.value) : json(nullptr);
  if (result.witness) {
    j["witness"] = json::object();
    j["witness"]["k"] = result.witness->class_count();
    j["witness"]["colors"] = result.witness->colors();
  } else {
    j["witness"] = nullptr;
  }
  j["proven_lower"] = result.proven_lower;
  j["proven_upper"] = result.proven_upper;
  j["stats"] = {{"nodes_explored", result.stats.nodes_explored},
                {"peak_depth", result.stats.peak_depth},
                {"elapsed_ms", result.stats.elapsed_ms}};
  return j.dump(2);
}

}  // namespace tdec
