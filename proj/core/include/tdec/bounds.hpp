#ifndef TDEC_BOUNDS_HPP
#define TDEC_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdec/families.hpp"
#include "tdec/graph.hpp"
#include "tdec/structure.hpp"

namespace tdec {

/// Piecewise path value: stored table for n = 3..8 (2,2,3,4,4,5); for n >= 9
/// by residue of n mod 4 (4k+1 -> 2k+2, 4k+2 -> 2k+3, 4k+3/4k+4 -> 2k+4).
int path_formula(int n);

/// Cycle counterpart: table for n = 3..7 (3,2,4,4,5); for n >= 8 by residue
/// (4k -> 2k+2, 4k+1 -> 2k+3, 4k+2/4k+3 -> 2k+4).
int cycle_formula(int n);

/// Exact closed forms: star n -> n (n >= 2), wheel n -> n-1 (n >= 4),
/// friendship n -> 2n (n >= 2). Other families have no exact closed form here.
int family_value(const FamilySpec& spec);

/// Any closed form this library knows, including path/cycle.
std::optional<int> closed_form_value(const FamilySpec& spec);

/// Bounds for K_N, N >= 3: N=2t -> (2t-1, 4t-2), N=2t+1 -> (2t, 4t-1).
std::pair<int, int> complete_bounds(int order);

/// Bounds for K_{a,b}, (a,b) != (1,1): a != b -> (max, a+b-1), a=b -> (a, 2a).
std::pair<int, int> bipartite_bounds(int a, int b);

/// Max-degree lower bound; EmptyGraph for edgeless graphs.
int delta_lower_bound(const Graph& g);

/// Generalized induced-path number: delta + path_formula(L-2) when the longest
/// induced path has L >= 6 vertices, else delta. Reported, never asserted:
/// taken literally the general form overshoots (e.g. long paths themselves),
/// so graph reports only assert the L >= 6 => delta+2 specialization.
int induced_path_lower_bound(const Graph& g, int size_cap = kDefaultInducedPathCap);

struct Bound {
  int value;
  std::string theorem;
};

struct BoundsReport {
  std::vector<Bound> lower;
  std::vector<Bound> upper;
  int best_lower = 0;
  int best_upper = -1;  // -1: no upper bound known
  void finalize();
};

/// All subdivision bounds applicable to G^{1/k} given m = |E(G)|, delta and
/// k >= 2, each tagged. Takes raw parameters so formula-level suites can use
/// it; subdivision_bounds_for derives them from a Graph.
BoundsReport subdivision_bounds(int m, int delta, int k);
BoundsReport subdivision_bounds_for(const Graph& g, int k);

/// The mod-4 piecewise forms for k >= 10, kept separate so they can be
/// checked against the path_formula-based general forms.
int subdivision_lower_piecewise(int m, int k);
int subdivision_upper_piecewise(int m, int delta, int k);

enum class SurgeryKind { EdgeRemoval, VertexRemoval, Contraction };

/// Interval for the surgered value given the base value x: edge removal
/// (x-2, x+2); vertex removal (x-deg, x+deg); contraction (x-2, x+mindeg-1).
std::pair<int, int> surgery_interval(SurgeryKind kind, int base_value, int degree_param = 0);

/// Sound bounds for an arbitrary graph: delta lower, the induced-P6 delta+2
/// lower when it applies, and the all-distinct-colors upper when every edge
/// has an adjacent edge.
BoundsReport bounds_for_graph(const Graph& g, int induced_cap = kDefaultInducedPathCap);

std::string bounds_to_json(const BoundsReport& report);

}  // namespace tdec

#endif
