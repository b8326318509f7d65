#ifndef TDEC_FAMILIES_HPP
#define TDEC_FAMILIES_HPP

#include <string>
#include <string_view>

#include "tdec/graph.hpp"

namespace tdec {

enum class Family { Path, Cycle, Complete, CompleteBipartite, Star, Wheel, Friendship };

struct FamilySpec {
  Family family;
  int a = 0;  // primary parameter
  int b = 0;  // second part size for complete-bipartite
  std::string name() const;
};

/// Parses "path:7", "complete-bipartite:3,2", "wheel:5", ...
FamilySpec parse_family_spec(std::string_view text);

Graph gen_path(int n);                        // n >= 1 vertices
Graph gen_cycle(int n);                       // n >= 3
Graph gen_complete(int n);                    // n >= 1
Graph gen_complete_bipartite(int a, int b);   // a,b >= 1; parts 0..a-1 and a..a+b-1
Graph gen_star(int n);                        // K_{1,n}, n >= 1, hub 0
Graph gen_wheel(int n);                       // n >= 4 vertices: hub 0 joined to cycle 1..n-1
Graph gen_friendship(int n);                  // n >= 1 triangles through hub 0

Graph gen_family(const FamilySpec& spec);

}  // namespace tdec

#endif
