#ifndef FORCING_GRAPH_HPP
#define FORCING_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "forcing/errors.hpp"

namespace forcing {

using Vertex = int;

// Fixed-width vertex set. All set bits must lie below the host graph's
// vertex count; the width caps graphs at 64 vertices.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet all(int n) {
    return {n >= 64 ? ~0ull : (1ull << n) - 1};
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.add(v);
    return s;
  }

  bool contains(Vertex v) const { return (bits >> v) & 1u; }
  void add(Vertex v) { bits |= 1ull << v; }
  void remove(Vertex v) { bits &= ~(1ull << v); }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
  bool is_subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  Vertex lowest() const { return static_cast<Vertex>(std::countr_zero(bits)); }
  VertexSet with(VertexSet o) const { return {bits | o.bits}; }
  VertexSet intersect(VertexSet o) const { return {bits & o.bits}; }
  VertexSet minus(VertexSet o) const { return {bits & ~o.bits}; }
  std::vector<Vertex> to_vector() const;

  bool operator==(const VertexSet&) const = default;
};

// Undirected simple edge, stored with the smaller endpoint first.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonicalizes the endpoint order. Throws InvalidEdge on loops.
Edge make_edge(Vertex u, Vertex v);

struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

// Immutable simple graph: canonical sorted edge list, per-vertex sorted
// neighbor lists plus neighbor bitmasks, and a bipartition when the graph
// is 2-colorable. Values are safe to share across threads.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  VertexSet neighbor_mask(Vertex v) const { return adj_mask_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const { return adj_mask_[u].contains(v); }
  VertexSet all_vertices() const { return VertexSet::all(n_); }

  bool is_bipartite() const { return bipartition_.has_value(); }
  const std::optional<Bipartition>& bipartition() const { return bipartition_; }

  // Structural equality: same vertex count and same canonical edge list.
  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  friend Graph build_graph(int n_vertices,
                           const std::vector<std::pair<int, int>>& edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> adj_mask_;
  std::optional<Bipartition> bipartition_;
};

// Builds the canonical graph: duplicate edges collapse, adjacency is sorted,
// and a bipartition is computed by 2-coloring each connected component (it is
// absent when any odd cycle exists). Within each component the side holding
// the smallest vertex id goes to side_a.
Graph build_graph(int n_vertices, const std::vector<std::pair<int, int>>& edges);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;     // -1 for vertices outside the set
  std::vector<Vertex> new_to_old;  // ascending original ids
};

// Subgraph induced by s, with the vertex relabeling in both directions.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

int min_degree(const Graph& g);
int max_degree(const Graph& g);

// True iff g has no induced cycle of length exactly 2l (l >= 2).
// DFS over chordless paths anchored at their smallest vertex.
bool is_c2l_free(const Graph& g, int l);

}  // namespace forcing

#endif  // FORCING_GRAPH_HPP
