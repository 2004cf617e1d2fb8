#ifndef FORCING_FAMILIES_HPP
#define FORCING_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forcing/matching.hpp"
#include "forcing/rational.hpp"

namespace forcing {

// Predicted quantities carried by a generated instance, each backed by a
// statement id from the bound catalog (see bounds.hpp).
struct ExpectedValues {
  std::optional<int> max_forcing;        // F(G)
  std::optional<int> min_forcing;        // f(G)
  std::optional<int> edge_count;         // e(G)
  std::optional<int> max_forcing_upper;  // floor of a proven upper bound
  std::map<std::string, std::string> statements;  // quantity -> statement id
};

// A generated graph together with the named perfect matchings used by the
// construction and the quantities it is expected to realize.
struct FamilyInstance {
  std::string name;
  Graph graph;
  std::map<std::string, PerfectMatching> named_matchings;
  ExpectedValues expected;
  std::vector<std::string> vertex_labels;  // human labels, index = vertex id
  bool degenerate = false;  // disconnected corner case (empty cross list)
};

// K_{a,b}. When a == b, carries the aligned matching "M_s" and the exact
// values F = f = a-1.
FamilyInstance complete_bipartite(int a, int b);

// d-dimensional hypercube, 1 <= d <= 5. Carries the floor of the proven
// upper bound on F and the dimension-0 matching "M_s".
FamilyInstance hypercube(int d);

// The order-2n witness graph showing that switches up to half-length k do
// not suffice (2 <= k <= n-1). Carries "M" (aligned) and "M_prime" plus
// F = n-k.
FamilyInstance gnk(int n, int k);

// Non-bipartite chain of clique pairs (every part >= 2, at least two parts)
// with "M" (within blocks) and "M_prime" (shifted, through the connectors);
// F = n-k where k is the number of parts.
FamilyInstance nonbipartite_chain(const std::vector<int>& parts);

// Ring of complete bipartite blocks joined by maximum matchings, defined for
// n ≡ 1 (mod k); attains F = n-k with f = ceil(n/k)-1. The j-th smallest
// vertices are paired across blocks; in the one oversized block the two
// largest-indexed vertices stay unmatched and their adjacency is asserted.
FamilyInstance h_family(int n, int k);

// Two complete bipartite blocks joined by paired cross edges, 0 <= l <=
// floor(n/2)-1; attains F = n-2 with f = ceil(n/2)+l-1. At l = floor(n/2)-1
// the cross list written by the index formulas is empty and the instance
// degenerates to a disjoint union with a single-edge block; the claimed
// values still hold and the instance is flagged degenerate. Carries "M_s"
// and "M_proof" (the matching whose small forcing set realizes f).
FamilyInstance gl_family(int n, int l);

// Vertex-relabeled disjoint union. Matchings named in every component are
// unioned; expected F and edge counts add when present in all components.
FamilyInstance disjoint_union(const std::vector<FamilyInstance>& instances);

// Balanced bipartite graph containing the planted matching "M_s" plus
// independent cross edges, each kept with probability edge_prob.
// Deterministic in seed.
FamilyInstance random_bipartite_with_pm(int n, const Rational& edge_prob,
                                        std::uint64_t seed);

}  // namespace forcing

#endif  // FORCING_FAMILIES_HPP
