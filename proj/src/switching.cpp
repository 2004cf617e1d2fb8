#include "forcing/switching.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace forcing {

namespace {

void check_cycle_in_graph(const Graph& g, const AlternatingCycle& c,
                          const char* who) {
  int len = static_cast<int>(c.vertices.size());
  for (int i = 0; i < len; ++i) {
    Vertex a = c.vertices[i];
    Vertex b = c.vertices[(i + 1) % len];
    if (a < 0 || a >= g.vertex_count() || !g.has_edge(a, b))
      throw NotAlternating(std::string(who) + ": cycle edge (" +
                           std::to_string(a) + "," + std::to_string(b) +
                           ") not in the graph");
  }
}

}  // namespace

PerfectMatching apply_switch(const PerfectMatching& m,
                             const AlternatingCycle& c) {
  int len = static_cast<int>(c.vertices.size());
  if (len < 4 || len % 2 != 0)
    throw NotAlternating("cycle length must be even and at least 4");
  VertexSet seen;
  for (Vertex v : c.vertices) {
    if (v < 0 || v >= static_cast<int>(m.mate.size()))
      throw NotAlternating("cycle vertex out of range");
    if (seen.contains(v)) throw NotAlternating("cycle repeats a vertex");
    seen.add(v);
  }
  bool first_matched = m.mate_of(c.vertices[0]) == c.vertices[1];
  for (int i = 0; i < len; ++i) {
    bool in_m = m.mate_of(c.vertices[i]) == c.vertices[(i + 1) % len];
    if (in_m != (i % 2 == 0 ? first_matched : !first_matched))
      throw NotAlternating("cycle edges do not alternate with the matching");
  }

  PerfectMatching out;
  out.mate = m.mate;
  for (int i = 0; i < len; ++i) {
    Vertex a = c.vertices[i];
    Vertex b = c.vertices[(i + 1) % len];
    if (m.mate_of(a) != b) {  // off-matching edge joins the new matching
      out.mate[a] = b;
      out.mate[b] = a;
    }
  }
  for (Vertex v = 0; v < static_cast<int>(out.mate.size()); ++v)
    if (out.mate[v] > v) out.edges.push_back(Edge{v, out.mate[v]});
  // edges collected in ascending order already
  return out;
}

std::vector<AlternatingCycle> symmetric_difference_cycles(
    const PerfectMatching& m1, const PerfectMatching& m2) {
  if (m1.mate.size() != m2.mate.size())
    throw DifferentGraphs("matchings cover different vertex counts");
  int n = static_cast<int>(m1.mate.size());
  std::vector<AlternatingCycle> out;
  VertexSet visited;
  for (Vertex v0 = 0; v0 < n; ++v0) {
    if (visited.contains(v0) || m1.mate[v0] == m2.mate[v0]) continue;
    std::vector<Vertex> seq;
    Vertex x = v0;
    bool use_first = true;
    do {
      seq.push_back(x);
      visited.add(x);
      x = use_first ? m1.mate[x] : m2.mate[x];
      use_first = !use_first;
    } while (x != v0);
    out.push_back(canonical_cycle(std::move(seq)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool validate_switch_sequence(const Graph& g, const SwitchSequence& seq,
                              const PerfectMatching& start,
                              const PerfectMatching& target) {
  PerfectMatching cur = start;
  for (const SwitchStep& step : seq.steps) {
    if (step.before != cur) return false;
    if (step.cycle.half_length() > seq.half_length_cap) return false;
    try {
      check_cycle_in_graph(g, step.cycle, "replay");
      if (apply_switch(cur, step.cycle) != step.after) return false;
    } catch (const NotAlternating&) {
      return false;
    }
    cur = step.after;
  }
  return cur == target;
}

namespace {

// Difference cycle relabeled so that (u[i], v[i]) is a target edge and
// (v[i], u[i+1]) a current edge, indices ascending around the cycle with
// u[0] the smallest vertex.
struct LabeledCycle {
  std::vector<Vertex> u, v;
  int l = 0;
};

LabeledCycle label_cycle(const AlternatingCycle& c,
                         const PerfectMatching& target) {
  const std::vector<Vertex>& vs = c.vertices;
  int len = static_cast<int>(vs.size());
  std::vector<Vertex> seq;
  if (target.mate_of(vs[0]) == vs[1]) {
    seq = vs;
  } else {
    seq.reserve(len);
    seq.push_back(vs[0]);
    for (int i = len - 1; i >= 1; --i) seq.push_back(vs[i]);
  }
  LabeledCycle lab;
  lab.l = len / 2;
  for (int i = 0; i < lab.l; ++i) {
    lab.u.push_back(seq[2 * i]);
    lab.v.push_back(seq[2 * i + 1]);
  }
  return lab;
}

// Chord v[i] -- u[i+j], minimizing the offset j in [2, l-1], then i.
// Returns {-1, 0} when the cycle is chordless.
std::pair<int, int> find_min_chord(const Graph& g, const LabeledCycle& lab) {
  for (int j = 2; j < lab.l; ++j)
    for (int i = 0; i < lab.l; ++i)
      if (g.has_edge(lab.v[i], lab.u[(i + j) % lab.l])) return {i, j};
  return {-1, 0};
}

// The current-alternating cycle running from v[i] along the difference
// cycle to u[i+j] and back through the chord. Carries j current edges.
AlternatingCycle chord_shortcut_cycle(const LabeledCycle& lab, int i, int j) {
  std::vector<Vertex> verts{lab.v[i]};
  for (int r = 1; r <= j; ++r) {
    verts.push_back(lab.u[(i + r) % lab.l]);
    if (r < j) verts.push_back(lab.v[(i + r) % lab.l]);
  }
  return canonical_cycle(std::move(verts));
}

// When every chord has offset >= k+2, assembles a short current-alternating
// cycle from the minimum chord, a greedy chain of disjoint interval cycles
// (chords u[m] -- v[q], each skipping at least one current edge), and the
// connecting paths.
AlternatingCycle composite_cycle(const Graph& g, const LabeledCycle& lab,
                                 int ci, int cj, int k,
                                 const PerfectMatching& target) {
  int l = lab.l;
  int j = cj;
  auto u_rel = [&](int r) { return lab.u[(ci - 1 + r) % l]; };
  auto v_rel = [&](int r) { return lab.v[(ci - 1 + r) % l]; };

  // Greedy selection: smallest endpoint q first, then smallest start m,
  // each new interval strictly after the previous one.
  std::vector<std::pair<int, int>> intervals;
  int low = 3;
  while (true) {
    int best_m = -1, best_q = -1;
    for (int q = low + 1; q <= j && best_m == -1; ++q)
      for (int m = low; m < q; ++m)
        if (g.has_edge(u_rel(m), v_rel(q))) {
          best_m = m;
          best_q = q;
          break;
        }
    if (best_m == -1) break;
    intervals.emplace_back(best_m, best_q);
    low = best_q + 1;
  }
  int t = static_cast<int>(intervals.size());
  if (t < j - k - 1)
    throw InternalInvariantViolation(
        "interval cycle count fell short: found " + std::to_string(t) +
        ", need " + std::to_string(j - k - 1));

  std::vector<Vertex> verts{v_rel(1)};
  int prev_end = 1;
  for (int p = 0; p <= t; ++p) {
    int next_start = (p < t) ? intervals[p].first : j + 1;
    for (int r = prev_end + 1; r <= next_start; ++r) {
      verts.push_back(u_rel(r));
      if (r < next_start) verts.push_back(v_rel(r));
    }
    if (p < t) {
      verts.push_back(v_rel(intervals[p].second));
      prev_end = intervals[p].second;
    }
  }
  AlternatingCycle out = canonical_cycle(std::move(verts));
  if (out.half_length() > k + 1)
    throw InternalInvariantViolation(
        "composite cycle exceeds the cap: half-length " +
        std::to_string(out.half_length()) + " > " + std::to_string(k + 1));
  bool touches_target = false;
  for (const Edge& e : out.edge_list())
    if (target.contains(e)) {
      touches_target = true;
      break;
    }
  if (!touches_target)
    throw InternalInvariantViolation("composite cycle misses every target edge");
  return out;
}

void emit_switch(const Graph& g, SwitchSequence& seq, PerfectMatching& cur,
                 const AlternatingCycle& c) {
  check_cycle_in_graph(g, c, "switch construction");
  PerfectMatching after = apply_switch(cur, c);
  seq.steps.push_back(SwitchStep{c, cur, after});
  cur = std::move(after);
}

// Direct construction: repeatedly switches the current matching along a
// cycle of half-length <= k+1 until it equals the target. Assumes the
// target attains the forcing lower bound n-k.
SwitchSequence transform_toward(const Graph& g, const PerfectMatching& target,
                                const PerfectMatching& start, int k) {
  SwitchSequence seq;
  seq.half_length_cap = k + 1;
  PerfectMatching cur = start;
  int fuel = g.vertex_count() + 8;  // every switch shares at least one pair
  while (cur != target) {
    if (--fuel < 0)
      throw InternalInvariantViolation("switch construction did not terminate");
    std::vector<AlternatingCycle> cycles =
        symmetric_difference_cycles(cur, target);
    const AlternatingCycle* short_cycle = nullptr;
    for (const AlternatingCycle& c : cycles)
      if (c.half_length() <= k + 1) {
        short_cycle = &c;
        break;
      }
    if (short_cycle != nullptr) {
      emit_switch(g, seq, cur, *short_cycle);
      continue;
    }
    LabeledCycle lab = label_cycle(cycles.front(), target);
    auto [ci, cj] = find_min_chord(g, lab);
    if (ci < 0)
      throw InternalInvariantViolation(
          "long difference cycle has no chord (half-length " +
          std::to_string(lab.l) + ")");
    if (cj <= k + 1)
      emit_switch(g, seq, cur, chord_shortcut_cycle(lab, ci, cj));
    else
      emit_switch(g, seq, cur, composite_cycle(g, lab, ci, cj, k, target));
  }
  return seq;
}

}  // namespace

SwitchSequence switch_sequence_bounded(const Graph& g,
                                       const PerfectMatching& m_target,
                                       const PerfectMatching& m_start, int k,
                                       bool skip_precheck) {
  if (!g.is_bipartite())
    throw NotBipartite("bounded switch construction needs a bipartite graph");
  if (!is_valid_matching(g, m_target) || !is_valid_matching(g, m_start))
    throw NotAMatching("matching invalid for this graph");
  int n = m_target.pair_count();
  if (k < 1 || k > n)
    throw InvalidK("k = " + std::to_string(k) + " outside [1, " +
                   std::to_string(n) + "]");
  if (m_start == m_target) return SwitchSequence{{}, k + 1};

  if (skip_precheck || check_forcing_lower_bound(g, m_target, k))
    return transform_toward(g, m_target, m_start, k);

  // The target itself misses the bound; pivot through the first matching
  // that attains it. Reversed steps stay valid switches.
  for (const PerfectMatching& pivot : enumerate_perfect_matchings(g)) {
    if (!check_forcing_lower_bound(g, pivot, k)) continue;
    SwitchSequence seq = transform_toward(g, pivot, m_start, k);
    SwitchSequence back = transform_toward(g, pivot, m_target, k);
    for (auto it = back.steps.rbegin(); it != back.steps.rend(); ++it)
      seq.steps.push_back(SwitchStep{it->cycle, it->after, it->before});
    return seq;
  }
  throw PreconditionFailed("no perfect matching attains forcing number >= " +
                           std::to_string(n - k) + " (n-k with k = " +
                           std::to_string(k) + ")");
}

namespace {

PerfectMatching refine_rec(const Graph& g, SwitchSequence& out,
                           const PerfectMatching& m, const AlternatingCycle& c) {
  if (c.half_length() == 2) {
    PerfectMatching after = apply_switch(m, c);
    out.steps.push_back(SwitchStep{c, m, after});
    return after;
  }
  LabeledCycle lab = label_cycle(c, m);  // matched edges are (u[i], v[i])
  int l = lab.l;
  int chord_i = -1, chord_j = -1;
  for (int i = 0; i < l && chord_i < 0; ++i)
    for (int j = 0; j < l; ++j) {
      if (j == i || (j + 1) % l == i) continue;  // cycle edges, not chords
      if (g.has_edge(lab.u[i], lab.v[j])) {
        chord_i = i;
        chord_j = j;
        break;
      }
    }
  if (chord_i < 0)
    throw NoChord("chordless alternating cycle of half-length " +
                      std::to_string(l),
                  c.vertices);

  int span = ((chord_j - chord_i) % l + l) % l;  // pairs i..j inclusive
  std::vector<Vertex> first_part;
  for (int r = 0; r <= span; ++r) {
    first_part.push_back(lab.u[(chord_i + r) % l]);
    first_part.push_back(lab.v[(chord_i + r) % l]);
  }
  std::vector<Vertex> second_part{lab.v[chord_j]};
  for (int r = span + 1; r < l; ++r) {
    second_part.push_back(lab.u[(chord_i + r) % l]);
    second_part.push_back(lab.v[(chord_i + r) % l]);
  }
  second_part.push_back(lab.u[chord_i]);

  PerfectMatching mid = refine_rec(g, out, m, canonical_cycle(first_part));
  return refine_rec(g, out, mid, canonical_cycle(second_part));
}

}  // namespace

SwitchSequence refine_to_2switches(const Graph& g, const PerfectMatching& m,
                                   const AlternatingCycle& c) {
  if (!is_valid_matching(g, m))
    throw NotAMatching("matching invalid for this graph");
  check_cycle_in_graph(g, c, "refinement");
  SwitchSequence out;
  out.half_length_cap = 2;
  refine_rec(g, out, m, c);
  return out;
}

std::optional<SwitchSequence> switch_reachable(const Graph& g,
                                               const PerfectMatching& m1,
                                               const PerfectMatching& m2,
                                               int half_length_cap) {
  if (m1.mate.size() != m2.mate.size())
    throw DifferentGraphs("matchings cover different vertex counts");
  if (!is_valid_matching(g, m1) || !is_valid_matching(g, m2))
    throw NotAMatching("matching invalid for this graph");
  if (m1 == m2) return SwitchSequence{{}, half_length_cap};
  if (half_length_cap < 2) return std::nullopt;

  std::vector<PerfectMatching> pms = enumerate_perfect_matchings(g);
  std::map<std::vector<Edge>, int> index;
  for (int i = 0; i < static_cast<int>(pms.size()); ++i)
    index[pms[i].edges] = i;

  auto neighbors = [&](const PerfectMatching& pm) {
    return enumerate_alternating_cycles(g, pm, half_length_cap);
  };

  // Distances from m2; switch adjacency is symmetric.
  std::vector<int> dist(pms.size(), -1);
  std::vector<int> queue{index.at(m2.edges)};
  dist[queue[0]] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int cur = queue[head];
    for (const AlternatingCycle& c : neighbors(pms[cur])) {
      int nb = index.at(apply_switch(pms[cur], c).edges);
      if (dist[nb] == -1) {
        dist[nb] = dist[cur] + 1;
        queue.push_back(nb);
      }
    }
  }

  int start = index.at(m1.edges);
  if (dist[start] == -1) return std::nullopt;

  // Walk the distance gradient, taking the first canonical cycle that moves
  // one step closer; among shortest sequences this is the smallest one.
  SwitchSequence seq;
  seq.half_length_cap = half_length_cap;
  PerfectMatching cur = m1;
  int d = dist[start];
  while (d > 0) {
    bool advanced = false;
    for (const AlternatingCycle& c : neighbors(cur)) {
      PerfectMatching next = apply_switch(cur, c);
      if (dist[index.at(next.edges)] == d - 1) {
        seq.steps.push_back(SwitchStep{c, cur, next});
        cur = std::move(next);
        --d;
        advanced = true;
        break;
      }
    }
    if (!advanced)
      throw InternalInvariantViolation("distance gradient walk got stuck");
  }
  return seq;
}

}  // namespace forcing
