#include "forcing/matching.hpp"

#include <algorithm>
#include <string>

namespace forcing {

namespace {

void guard_size(const Graph& g, const char* what) {
  if (g.vertex_count() > kEnumerationGuard)
    throw TooLarge(std::string(what) + " refuses graphs above " +
                   std::to_string(kEnumerationGuard) + " vertices");
}

std::vector<Edge> sorted_edges_from_mate(const std::vector<Vertex>& mate) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) edges.push_back(Edge{v, mate[v]});
  return edges;
}

}  // namespace

PerfectMatching matching_from_edges(const Graph& g, std::vector<Edge> edges) {
  std::vector<Vertex> mate(g.vertex_count(), -1);
  for (Edge& e : edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 0 || e.b >= g.vertex_count() || e.a == e.b)
      throw NotAMatching("edge out of range");
    if (!g.has_edge(e.a, e.b))
      throw NotAMatching("edge (" + std::to_string(e.a) + "," +
                         std::to_string(e.b) + ") not in the graph");
    if (mate[e.a] != -1 || mate[e.b] != -1)
      throw NotAMatching("edges share vertex " +
                         std::to_string(mate[e.a] != -1 ? e.a : e.b));
    mate[e.a] = e.b;
    mate[e.b] = e.a;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (mate[v] == -1)
      throw NotAMatching("vertex " + std::to_string(v) + " unsaturated");
  std::sort(edges.begin(), edges.end());
  return PerfectMatching{std::move(edges), std::move(mate)};
}

bool is_valid_matching(const Graph& g, const PerfectMatching& m) {
  if (static_cast<int>(m.mate.size()) != g.vertex_count()) return false;
  try {
    matching_from_edges(g, m.edges);
  } catch (const NotAMatching&) {
    return false;
  }
  return true;
}

std::vector<Edge> AlternatingCycle::edge_list() const {
  std::vector<Edge> out;
  int len = static_cast<int>(vertices.size());
  for (int i = 0; i < len; ++i)
    out.push_back(make_edge(vertices[i], vertices[(i + 1) % len]));
  return out;
}

VertexSet AlternatingCycle::vertex_set() const {
  VertexSet s;
  for (Vertex v : vertices) s.add(v);
  return s;
}

AlternatingCycle canonical_cycle(std::vector<Vertex> vertices) {
  int len = static_cast<int>(vertices.size());
  if (len < 4 || len % 2 != 0)
    throw InvalidParams("cycle length must be even and at least 4");
  int pos = static_cast<int>(
      std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  std::rotate(vertices.begin(), vertices.begin() + pos, vertices.end());
  if (vertices[1] > vertices[len - 1])
    std::reverse(vertices.begin() + 1, vertices.end());
  return AlternatingCycle{std::move(vertices)};
}

long long count_perfect_matchings(const Graph& g, VertexSet active,
                                  long long limit) {
  if (limit <= 0) return 0;
  if (active.empty()) return 1;
  std::uint64_t rem = active.bits;
  while (rem) {
    Vertex v = static_cast<Vertex>(std::countr_zero(rem));
    if (!g.neighbor_mask(v).intersects(active)) return 0;
    rem &= rem - 1;
  }
  Vertex v = active.lowest();
  active.remove(v);
  long long total = 0;
  std::uint64_t candidates = g.neighbor_mask(v).intersect(active).bits;
  while (candidates) {
    Vertex w = static_cast<Vertex>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    VertexSet next = active;
    next.remove(w);
    total += count_perfect_matchings(g, next, limit - total);
    if (total >= limit) return total;
  }
  return total;
}

namespace {

void enumerate_pm_rec(const Graph& g, VertexSet unsat,
                      std::vector<Vertex>& mate,
                      std::vector<PerfectMatching>& out) {
  if (unsat.empty()) {
    out.push_back(PerfectMatching{sorted_edges_from_mate(mate), mate});
    return;
  }
  std::uint64_t rem = unsat.bits;
  while (rem) {
    Vertex v = static_cast<Vertex>(std::countr_zero(rem));
    if (!g.neighbor_mask(v).intersects(unsat)) return;
    rem &= rem - 1;
  }
  Vertex v = unsat.lowest();
  unsat.remove(v);
  std::uint64_t candidates = g.neighbor_mask(v).intersect(unsat).bits;
  while (candidates) {
    Vertex w = static_cast<Vertex>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    VertexSet next = unsat;
    next.remove(w);
    mate[v] = w;
    mate[w] = v;
    enumerate_pm_rec(g, next, mate, out);
    mate[v] = -1;
    mate[w] = -1;
  }
}

}  // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g) {
  guard_size(g, "perfect matching enumeration");
  std::vector<PerfectMatching> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<Vertex> mate(g.vertex_count(), -1);
  enumerate_pm_rec(g, g.all_vertices(), mate, out);
  // Matching the lowest unsaturated vertex first with partners ascending
  // already yields lexicographic order of the canonical edge lists.
  return out;
}

bool has_perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  return count_perfect_matchings(g, g.all_vertices(), 1) == 1;
}

bool has_unique_perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  return count_perfect_matchings(g, g.all_vertices(), 2) == 1;
}

namespace {

// Alternating-cycle DFS. The anchor is the cycle's smallest vertex and the
// first step is its matched edge, which generates each cycle exactly once.
struct CycleSearch {
  const Graph& g;
  const PerfectMatching& m;
  int max_half;  // 0 = unbounded
  std::vector<AlternatingCycle>* out;
  std::vector<Vertex> path;
  VertexSet on_path;

  void run(Vertex anchor) {
    Vertex partner = m.mate_of(anchor);
    if (partner < anchor) return;  // some cycle vertex would beat the anchor
    path = {anchor, partner};
    on_path = VertexSet::of({anchor, partner});
    extend(partner, anchor, 1);
  }

  void extend(Vertex last, Vertex anchor, int pairs) {
    for (Vertex w : g.neighbors(last)) {
      if (w == anchor && pairs >= 2) out->push_back(canonical_cycle(path));
      if (w <= anchor || on_path.contains(w)) continue;
      if (max_half != 0 && pairs >= max_half) continue;
      Vertex w_mate = m.mate_of(w);
      if (w_mate <= anchor || on_path.contains(w_mate)) continue;
      path.push_back(w);
      path.push_back(w_mate);
      on_path.add(w);
      on_path.add(w_mate);
      extend(w_mate, anchor, pairs + 1);
      on_path.remove(w);
      on_path.remove(w_mate);
      path.pop_back();
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<AlternatingCycle> enumerate_alternating_cycles(
    const Graph& g, const PerfectMatching& m,
    std::optional<int> max_half_length) {
  guard_size(g, "alternating cycle enumeration");
  if (!is_valid_matching(g, m))
    throw NotAMatching("matching invalid for this graph");
  if (max_half_length && *max_half_length < 2)
    return {};
  std::vector<AlternatingCycle> out;
  CycleSearch search{g, m, max_half_length.value_or(0), &out, {}, {}};
  for (Vertex anchor = 0; anchor < g.vertex_count(); ++anchor)
    search.run(anchor);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_forcing_set(const Graph& g, const PerfectMatching& m,
                    const std::vector<Edge>& s) {
  VertexSet deleted;
  for (const Edge& e : s) {
    Edge c = make_edge(e.a, e.b);
    if (c.a < 0 || c.b >= g.vertex_count() || !m.contains(c))
      throw NotSubsetOfMatching("edge (" + std::to_string(c.a) + "," +
                                std::to_string(c.b) + ") not in the matching");
    deleted.add(c.a);
    deleted.add(c.b);
  }
  VertexSet active = g.all_vertices().minus(deleted);
  return count_perfect_matchings(g, active, 2) == 1;
}

namespace {

// Keeps one copy of each mask and drops strict supersets of another mask.
std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(),
            [](std::uint64_t a, std::uint64_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  std::vector<std::uint64_t> keep;
  for (std::uint64_t mask : masks) {
    bool dominated = false;
    for (std::uint64_t k : keep)
      if ((k & ~mask) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(mask);
  }
  return keep;
}

bool next_combination(std::vector<int>& idx, int n) {
  int r = static_cast<int>(idx.size());
  for (int i = r - 1; i >= 0; --i) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

namespace {

// A cycle of half-length l visits l matched pairs and carries exactly their
// matched edges, so its transversal mask equals its visited pair set. Only
// containment-minimal pair sets matter for transversal questions; this
// enumerates them by increasing half-length, cutting any branch whose
// visited pairs already contain a recorded set.
struct MinimalCycleSearch {
  const Graph& g;
  const PerfectMatching& m;
  const std::vector<int>& pair_index;
  std::vector<std::uint64_t> found;
  VertexSet on_path;
  std::uint64_t pairs = 0;
  int target = 2;

  bool dominated(std::uint64_t candidate) const {
    for (std::uint64_t mask : found)
      if ((mask & ~candidate) == 0) return true;
    return false;
  }

  void run(int pair_count) {
    for (target = 2; target <= pair_count; ++target)
      for (Vertex anchor = 0; anchor < g.vertex_count(); ++anchor) {
        Vertex partner = m.mate_of(anchor);
        if (partner < anchor) continue;
        on_path = VertexSet::of({anchor, partner});
        pairs = 1ull << pair_index[anchor];
        extend(partner, anchor, 1);
      }
  }

  void extend(Vertex last, Vertex anchor, int depth) {
    if (dominated(pairs)) return;
    for (Vertex w : g.neighbors(last)) {
      if (w == anchor && depth == target && !dominated(pairs))
        found.push_back(pairs);
      if (w <= anchor || on_path.contains(w) || depth >= target) continue;
      Vertex w_mate = m.mate_of(w);
      if (w_mate <= anchor || on_path.contains(w_mate)) continue;
      on_path.add(w);
      on_path.add(w_mate);
      pairs |= 1ull << pair_index[w];
      extend(w_mate, anchor, depth + 1);
      pairs &= ~(1ull << pair_index[w]);
      on_path.remove(w);
      on_path.remove(w_mate);
    }
  }
};

}  // namespace

ForcingCertificate forcing_number(const Graph& g, const PerfectMatching& m) {
  guard_size(g, "forcing number search");
  if (!is_valid_matching(g, m))
    throw NotAMatching("matching invalid for this graph");

  int n = m.pair_count();
  std::vector<int> pair_index(g.vertex_count(), -1);
  for (int i = 0; i < n; ++i) {
    pair_index[m.edges[i].a] = i;
    pair_index[m.edges[i].b] = i;
  }

  // Forcing sets are exactly the transversals of the alternating cycles;
  // the minimal visited-pair sets decide every transversal question.
  MinimalCycleSearch search{g, m, pair_index, {}, {}, 0, 2};
  search.run(n);
  std::vector<std::uint64_t> masks = minimal_masks(std::move(search.found));

  for (int size = 0; size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    bool more = size <= n;
    while (more) {
      std::uint64_t chosen = 0;
      for (int i : idx) chosen |= 1ull << i;
      bool hits_all = true;
      for (std::uint64_t mask : masks)
        if ((mask & chosen) == 0) {
          hits_all = false;
          break;
        }
      if (hits_all) {
        std::vector<Edge> forcing_set;
        for (int i : idx) forcing_set.push_back(m.edges[i]);
        if (!is_forcing_set(g, m, forcing_set))
          throw InternalInvariantViolation(
              "cycle transversal failed the definitional forcing check");
        return ForcingCertificate{m, std::move(forcing_set), size, 1};
      }
      more = next_combination(idx, n);
    }
  }
  throw InternalInvariantViolation("no forcing set found up to the full matching");
}

bool check_forcing_lower_bound(const Graph& g, const PerfectMatching& m,
                               int k) {
  guard_size(g, "forcing lower bound check");
  if (!is_valid_matching(g, m))
    throw NotAMatching("matching invalid for this graph");
  int n = m.pair_count();
  if (k < 1 || k > n)
    throw InvalidK("k = " + std::to_string(k) + " outside [1, " +
                   std::to_string(n) + "]");
  if (k == n) return true;  // no subset of size n+1 exists

  std::vector<int> idx(k + 1);
  for (int i = 0; i <= k; ++i) idx[i] = i;
  bool more = true;
  while (more) {
    VertexSet span;
    for (int i : idx) {
      span.add(m.edges[i].a);
      span.add(m.edges[i].b);
    }
    // The subset itself matches the induced subgraph perfectly, so an
    // alternating cycle exists there iff a second matching does.
    if (count_perfect_matchings(g, span, 2) < 2) return false;
    more = next_combination(idx, n);
  }
  return true;
}

SpectrumReport forcing_spectrum(const Graph& g) {
  std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g);
  if (pms.empty()) throw NoPerfectMatching("graph has no perfect matching");

  SpectrumReport report;
  for (PerfectMatching& pm : pms) {
    int f = forcing_number(g, pm).size;
    report.per_matching.emplace_back(std::move(pm), f);
  }
  for (const auto& [pm, f] : report.per_matching) report.spectrum.push_back(f);
  std::sort(report.spectrum.begin(), report.spectrum.end());
  report.spectrum.erase(
      std::unique(report.spectrum.begin(), report.spectrum.end()),
      report.spectrum.end());
  report.f_min = report.spectrum.front();
  report.f_max = report.spectrum.back();
  for (std::size_t i = 1; i < report.spectrum.size(); ++i)
    if (report.spectrum[i] - report.spectrum[i - 1] >= 2)
      report.gaps.emplace_back(report.spectrum[i - 1], report.spectrum[i]);
  return report;
}

int max_unique_pm_induced_order(const Graph& g) {
  guard_size(g, "unique matching induced order search");
  int n = g.vertex_count();
  for (int size = n - (n % 2); size >= 2; size -= 2) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    bool more = size <= n;
    while (more) {
      VertexSet s;
      for (int i : idx) s.add(i);
      if (count_perfect_matchings(g, s, 2) == 1) return size;
      more = next_combination(idx, n);
    }
  }
  return 0;
}

}  // namespace forcing
