#include "forcing/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "forcing/matching.hpp"

namespace forcing {

namespace {

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  VertexSet seen = VertexSet::of({0});
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen.contains(w)) {
        seen.add(w);
        stack.push_back(w);
      }
  }
  return seen == g.all_vertices();
}

std::vector<std::vector<int>> permutations(int m) {
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// columns of the transposed biadjacency matrix
std::vector<int> transpose_columns(const std::vector<int>& cols, int m) {
  std::vector<int> rows(m, 0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if ((cols[j] >> i) & 1) rows[i] |= 1 << j;
  return rows;
}

// Minimum over all row permutations and transposition of the sorted column
// list; a candidate is kept iff it equals this form.
std::vector<int> canonical_form(const std::vector<int>& cols, int m,
                                const std::vector<std::vector<int>>& perm_tables) {
  std::vector<int> best;
  std::vector<int> mapped(m);
  const std::vector<int> trans = transpose_columns(cols, m);
  for (const std::vector<int>* variant : {&cols, &trans}) {
    for (const std::vector<int>& table : perm_tables) {
      for (int j = 0; j < m; ++j) mapped[j] = table[(*variant)[j]];
      std::sort(mapped.begin(), mapped.end());
      if (best.empty() || mapped < best) best = mapped;
    }
  }
  return best;
}

Graph graph_from_columns(const std::vector<int>& cols, int m) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if ((cols[j] >> i) & 1) edges.emplace_back(i, m + j);
  return build_graph(2 * m, edges);
}

void enumerate_side(int m, std::vector<Graph>& out) {
  std::vector<std::vector<int>> perms = permutations(m);
  // per-permutation lookup: mask -> row-permuted mask
  std::vector<std::vector<int>> perm_tables;
  for (const std::vector<int>& p : perms) {
    std::vector<int> table(1 << m, 0);
    for (int mask = 0; mask < (1 << m); ++mask)
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) table[mask] |= 1 << p[i];
    perm_tables.push_back(std::move(table));
  }

  int full = (1 << m) - 1;
  std::vector<int> cols(m, 0);
  // non-decreasing column sequences over nonzero masks
  auto rec = [&](auto&& self, int pos, int min_value) -> void {
    if (pos == m) {
      int covered = 0;
      for (int c : cols) covered |= c;
      if (covered != full) return;  // a row would be isolated
      Graph g = graph_from_columns(cols, m);
      if (!is_connected(g)) return;
      if (!has_perfect_matching(g)) return;
      if (canonical_form(cols, m, perm_tables) != cols) return;
      out.push_back(std::move(g));
      return;
    }
    for (int value = min_value; value <= full; ++value) {
      cols[pos] = value;
      self(self, pos + 1, value);
    }
  };
  rec(rec, 0, 1);
}

}  // namespace

std::vector<Graph> enumerate_connected_bipartite_pm_graphs(int max_vertices) {
  if (max_vertices > 10)
    throw TooLarge("exhaustive enumeration is limited to 10 vertices");
  std::vector<Graph> out;
  for (int m = 1; 2 * m <= max_vertices; ++m) enumerate_side(m, out);
  return out;
}

namespace {

void chain_partitions(int remaining, int min_part, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    if (acc.size() >= 2) out.push_back(acc);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    acc.push_back(part);
    chain_partitions(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<FamilyInstance> family_corpus(int max_vertices) {
  std::vector<FamilyInstance> out;
  for (int a = 1; 2 * a <= max_vertices; ++a)
    out.push_back(complete_bipartite(a, a));
  for (int d = 1; d <= 4 && (1 << d) <= max_vertices; ++d)
    out.push_back(hypercube(d));
  for (int n = 3; 2 * n <= max_vertices; ++n)
    for (int k = 2; k <= n - 1; ++k) out.push_back(gnk(n, k));
  for (int total = 4; 2 * total <= max_vertices; ++total) {
    std::vector<std::vector<int>> partitions;
    std::vector<int> acc;
    chain_partitions(total, 2, acc, partitions);
    for (const std::vector<int>& parts : partitions)
      out.push_back(nonbipartite_chain(parts));
  }
  for (int n = 3; 2 * n <= max_vertices; ++n)
    for (int k = 2; k < n; ++k)
      if (n % k == 1) out.push_back(h_family(n, k));
  for (int n = 2; 2 * n <= max_vertices; ++n)
    for (int l = 0; l <= n / 2 - 1; ++l) out.push_back(gl_family(n, l));
  for (int copies = 2; copies <= max_vertices / 2; ++copies)
    for (int s = 1; 2 * copies * s <= max_vertices; ++s)
      out.push_back(disjoint_union(
          std::vector<FamilyInstance>(copies, complete_bipartite(s, s))));
  return out;
}

std::vector<FamilyInstance> random_corpus(int count, std::uint64_t seed_base) {
  std::vector<FamilyInstance> out;
  for (int s = 1; s <= count; ++s) {
    int n = 2 + (s % 5);
    Rational prob(1 + (s % 8), 9);
    out.push_back(random_bipartite_with_pm(n, prob, seed_base + s));
  }
  return out;
}

std::vector<CorpusEntry> full_corpus(int max_enum_vertices,
                                     int max_family_vertices, int random_count,
                                     std::uint64_t seed_base) {
  std::vector<CorpusEntry> out;
  std::vector<Graph> enumerated =
      enumerate_connected_bipartite_pm_graphs(max_enum_vertices);
  for (std::size_t i = 0; i < enumerated.size(); ++i)
    out.push_back(CorpusEntry{
        "enum:" + std::to_string(enumerated[i].vertex_count()) + "v:" +
            std::to_string(i),
        std::move(enumerated[i])});
  for (FamilyInstance& inst : family_corpus(max_family_vertices))
    out.push_back(CorpusEntry{"family:" + inst.name, std::move(inst.graph)});
  for (FamilyInstance& inst : random_corpus(random_count, seed_base))
    out.push_back(CorpusEntry{"random:" + inst.name, std::move(inst.graph)});
  return out;
}

}  // namespace forcing
