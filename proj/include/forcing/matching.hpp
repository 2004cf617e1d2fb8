#ifndef FORCING_MATCHING_HPP
#define FORCING_MATCHING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

// Operations that enumerate vertex or edge subsets refuse graphs above this
// size instead of running unboundedly.
inline constexpr int kEnumerationGuard = 32;

// A set of pairwise disjoint edges saturating every vertex, as a canonical
// sorted edge list plus the per-vertex partner array (a fixed-point-free
// involution).
struct PerfectMatching {
  std::vector<Edge> edges;
  std::vector<Vertex> mate;

  Vertex mate_of(Vertex v) const { return mate[v]; }
  bool contains(Edge e) const { return mate[e.a] == e.b; }
  int pair_count() const { return static_cast<int>(edges.size()); }

  friend auto operator<=>(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges <=> b.edges;
  }
  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges == b.edges;
  }
};

// Validates that the given edges form a perfect matching of g and builds the
// canonical value. Throws NotAMatching otherwise.
PerfectMatching matching_from_edges(const Graph& g, std::vector<Edge> edges);

// Validates m against g (edges present, disjoint, saturating).
bool is_valid_matching(const Graph& g, const PerfectMatching& m);

// An even cycle whose edges alternate in and out of a reference matching.
// Stored in canonical form: the cyclic vertex sequence rotated so the lowest
// vertex comes first, oriented so its lower cycle-neighbor comes second.
struct AlternatingCycle {
  std::vector<Vertex> vertices;

  int half_length() const { return static_cast<int>(vertices.size()) / 2; }
  std::vector<Edge> edge_list() const;
  VertexSet vertex_set() const;

  friend auto operator<=>(const AlternatingCycle& a, const AlternatingCycle& b) {
    if (auto c = a.vertices.size() <=> b.vertices.size(); c != 0) return c;
    return a.vertices <=> b.vertices;
  }
  friend bool operator==(const AlternatingCycle&, const AlternatingCycle&) = default;
};

// Rotates/reflects a cyclic vertex sequence into canonical form.
AlternatingCycle canonical_cycle(std::vector<Vertex> vertices);

// Counts perfect matchings of the subgraph induced by `active`, stopping as
// soon as `limit` is reached. The empty vertex set counts one (empty)
// matching. Backtracks on the lowest unsaturated vertex and prunes any
// branch where some unsaturated vertex has no unsaturated neighbor.
long long count_perfect_matchings(const Graph& g, VertexSet active,
                                  long long limit);

// All perfect matchings, each exactly once, ordered lexicographically by
// canonical edge list. Empty when none exist or the order is odd.
std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g);

bool has_perfect_matching(const Graph& g);

// True iff exactly one perfect matching exists; stops after finding two.
bool has_unique_perfect_matching(const Graph& g);

// Every m-alternating cycle of half-length l in [2, max_half_length]
// (unbounded when absent), each exactly once in canonical form, ordered by
// (length, vertex sequence).
std::vector<AlternatingCycle> enumerate_alternating_cycles(
    const Graph& g, const PerfectMatching& m,
    std::optional<int> max_half_length = std::nullopt);

// True iff m is the only perfect matching of g containing s, i.e. the graph
// induced by the vertices not saturated by s has a unique perfect matching.
// s must be a subset of m.
bool is_forcing_set(const Graph& g, const PerfectMatching& m,
                    const std::vector<Edge>& s);

// A minimum forcing set with its uniqueness witness (the number of perfect
// matchings left after deleting the saturated vertices, always 1).
struct ForcingCertificate {
  PerfectMatching matching;
  std::vector<Edge> forcing_set;
  int size = 0;
  long long witness = 0;
};

// Minimum forcing set of m, ties broken lexicographically: subset sizes
// ascend and, within a size, index combinations over the canonical edge list
// ascend; the first subset meeting every m-alternating cycle wins. The
// accepted set is re-verified against the definitional unique-matching check
// before being returned.
ForcingCertificate forcing_number(const Graph& g, const PerfectMatching& m);

// True iff the subgraph induced by the endpoints of every (k+1)-subset of m
// contains an m-alternating cycle; equivalent to f(g, m) >= n - k. Checking
// size k+1 alone suffices since a cycle survives in every superset.
bool check_forcing_lower_bound(const Graph& g, const PerfectMatching& m, int k);

struct SpectrumReport {
  std::vector<std::pair<PerfectMatching, int>> per_matching;
  std::vector<int> spectrum;              // sorted distinct forcing numbers
  int f_min = 0;                          // f(G)
  int f_max = 0;                          // F(G)
  std::vector<std::pair<int, int>> gaps;  // consecutive values with b-a >= 2
};

// Forcing number of every perfect matching, in canonical matching order.
SpectrumReport forcing_spectrum(const Graph& g);

// Largest size of an even vertex subset whose induced subgraph has a unique
// perfect matching; 0 when none exists. Scans sizes descending and returns
// on the first success.
int max_unique_pm_induced_order(const Graph& g);

}  // namespace forcing

#endif  // FORCING_MATCHING_HPP
