#ifndef TDEC_SOLVER_HPP
#define TDEC_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "tdec/coloring.hpp"
#include "tdec/graph.hpp"

namespace tdec {

enum class SolveStatus { Exact, Infeasible, TimedOut };

struct SolveStats {
  std::int64_t nodes_explored = 0;
  int peak_depth = 0;
  double elapsed_ms = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<int> value;
  std::optional<EdgeColoring> witness;
  int proven_lower = 0;
  int proven_upper = 0;
  SolveStats stats;
};

enum class BranchOrder { LineDegreeDesc, InputOrder };

struct SolverOptions {
  std::chrono::milliseconds timeout{60'000};
  /// Caller-supplied bracket; must be sound (initial_lower <= true value <=
  /// initial_upper). The search does not re-prove values below initial_lower.
  /// initial_upper is accepted for completeness but cannot shorten the run:
  /// the upward iteration stops at the first feasible class count anyway, and
  /// an Exact result always carries a search- or greedy-produced witness.
  std::optional<int> initial_lower;
  std::optional<int> initial_upper;
  BranchOrder branching_order = BranchOrder::LineDegreeDesc;
  /// Cross-check Exact results against the enumeration oracle when m <= 10.
  bool oracle_cross_check = false;
};

/// Hard cap on edges for the exact search (bitset state).
inline constexpr int kMaxSolveEdges = 64;
/// Hard cap on edges for the deliberately naive oracles.
inline constexpr int kMaxOracleEdges = 10;

/// True iff every edge has an adjacent edge, i.e. no component is a lone K2.
/// Edgeless graphs are feasible with the empty coloring.
bool tde_feasible(const Graph& g);

/// Exact TDEC value by iterative deepening on the class count: from the best
/// lower bound upward, a complete backtracking search per target k.
SolveResult solve_exact(const Graph& g, const SolverOptions& opts = {});

/// Smallest k <= k_max admitting a TDE-coloring, by enumerating edge-set
/// partitions (restricted growth strings) filtered through validate().
/// Independent of the solve_exact search path.
std::optional<int> solve_oracle_enumeration(const Graph& g, int k_max);

/// Same value via brute-force total dominator vertex coloring of L(G);
/// shares no search or validation code with the other two routes.
std::optional<int> solve_oracle_line_graph(const Graph& g, int k_max);

/// Greedy upper bound with a valid witness; falls back to all-distinct
/// colors (k = m), which is valid for any feasible graph.
std::pair<int, EdgeColoring> heuristic_upper(const Graph& g);

std::string solve_result_to_json(const SolveResult& result);

}  // namespace tdec

#endif
