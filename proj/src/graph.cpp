#include "forcing/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace forcing {

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  std::uint64_t rem = bits;
  while (rem) {
    out.push_back(static_cast<Vertex>(std::countr_zero(rem)));
    rem &= rem - 1;
  }
  return out;
}

Edge make_edge(Vertex u, Vertex v) {
  if (u == v) throw InvalidEdge("loop edge at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  return Edge{u, v};
}

Graph build_graph(int n_vertices,
                  const std::vector<std::pair<int, int>>& edges) {
  if (n_vertices < 0 || n_vertices > Graph::kMaxVertices)
    throw TooLarge("vertex count " + std::to_string(n_vertices) +
                   " outside [0, " + std::to_string(Graph::kMaxVertices) + "]");

  Graph g;
  g.n_ = n_vertices;
  g.adj_.resize(n_vertices);
  g.adj_mask_.resize(n_vertices);

  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
      throw InvalidVertex("edge endpoint (" + std::to_string(u) + "," +
                          std::to_string(v) + ") out of range");
    Edge e = make_edge(u, v);
    if (g.adj_mask_[e.a].contains(e.b)) continue;  // duplicate collapses
    g.adj_mask_[e.a].add(e.b);
    g.adj_mask_[e.b].add(e.a);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (int v = 0; v < n_vertices; ++v) g.adj_[v] = g.adj_mask_[v].to_vector();

  // 2-color each component; any odd cycle cancels the bipartition. The side
  // holding the component's smallest vertex id goes to side_a.
  std::vector<int> color(n_vertices, -1);
  bool bipartite = true;
  Bipartition parts;
  for (int s = 0; s < n_vertices && bipartite; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty() && bipartite) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.adj_[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  if (bipartite) {
    for (int v = 0; v < n_vertices; ++v) {
      if (color[v] == 0)
        parts.side_a.add(v);
      else
        parts.side_b.add(v);
    }
    g.bipartition_ = parts;
  }
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw EmptySet("induced subgraph of the empty set");
  if (!s.is_subset_of(g.all_vertices()))
    throw InvalidVertex("vertex set exceeds the graph");

  InducedSubgraph out;
  out.new_to_old = s.to_vector();
  out.old_to_new.assign(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(out.new_to_old.size()); ++i)
    out.old_to_new[out.new_to_old[i]] = i;

  std::vector<std::pair<int, int>> kept;
  for (const Edge& e : g.edges())
    if (s.contains(e.a) && s.contains(e.b))
      kept.emplace_back(out.old_to_new[e.a], out.old_to_new[e.b]);
  out.graph = build_graph(static_cast<int>(out.new_to_old.size()), kept);
  return out;
}

int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw InvalidParams("degree of the empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw InvalidParams("degree of the empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

namespace {

// Extends a chordless path looking for an induced cycle of length `target`.
// Path vertices other than the anchor are > anchor; each new vertex may be
// adjacent only to the path's last vertex, except the final one which must
// also close back to the anchor.
bool induced_cycle_dfs(const Graph& g, std::vector<Vertex>& path,
                       VertexSet on_path, int target) {
  Vertex anchor = path.front();
  Vertex last = path.back();
  int len = static_cast<int>(path.size());
  for (Vertex w : g.neighbors(last)) {
    if (w <= anchor || on_path.contains(w)) continue;
    VertexSet others = on_path;
    others.remove(last);
    VertexSet back = g.neighbor_mask(w).intersect(others);
    if (len == target - 1) {
      if (back == VertexSet::of({anchor})) return true;
    } else {
      if (!back.empty()) continue;
      path.push_back(w);
      on_path.add(w);
      if (induced_cycle_dfs(g, path, on_path, target)) return true;
      on_path.remove(w);
      path.pop_back();
    }
  }
  return false;
}

}  // namespace

bool is_c2l_free(const Graph& g, int l) {
  if (l < 2) throw InvalidParams("induced even cycle check needs l >= 2");
  int target = 2 * l;
  if (g.vertex_count() < target) return true;
  for (Vertex anchor = 0; anchor < g.vertex_count(); ++anchor) {
    std::vector<Vertex> path{anchor};
    if (induced_cycle_dfs(g, path, VertexSet::of({anchor}), target))
      return false;
  }
  return true;
}

}  // namespace forcing
