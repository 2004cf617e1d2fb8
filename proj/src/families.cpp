#include "forcing/families.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace forcing {

namespace {

// Paired families lay out u_1..u_n as ids 0..n-1 and v_1..v_n as n..2n-1.
int u_id(int i, int) { return i - 1; }
int v_id(int i, int n) { return n + i - 1; }

std::vector<std::string> uv_labels(int a, int b) {
  std::vector<std::string> labels;
  for (int i = 1; i <= a; ++i) labels.push_back("u" + std::to_string(i));
  for (int i = 1; i <= b; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

std::string param_name(const std::string& family,
                       const std::vector<int>& params) {
  std::string out = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

}  // namespace

FamilyInstance complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidParams("complete bipartite needs a,b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);

  FamilyInstance inst;
  inst.name = param_name("knn", {a, b});
  inst.graph = build_graph(a + b, edges);
  inst.vertex_labels = uv_labels(a, b);
  inst.expected.edge_count = a * b;
  inst.expected.statements["edges"] = "definition";
  if (a == b) {
    std::vector<Edge> aligned;
    for (int i = 0; i < a; ++i) aligned.push_back(make_edge(i, a + i));
    inst.named_matchings["M_s"] = matching_from_edges(inst.graph, aligned);
    inst.expected.max_forcing = a - 1;
    inst.expected.min_forcing = a - 1;
    inst.expected.statements["F"] = "Cor2.2";
    inst.expected.statements["f"] = "Sec1.fKnn";
  }
  return inst;
}

FamilyInstance hypercube(int d) {
  if (d < 1) throw InvalidParams("hypercube dimension must be >= 1");
  if (d > 5) throw TooLarge("hypercube beyond d = 5 exceeds desk scale");
  int n = 1 << d;
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x)
    for (int bit = 0; bit < d; ++bit)
      if ((x & (1 << bit)) == 0) edges.emplace_back(x, x | (1 << bit));

  FamilyInstance inst;
  inst.name = param_name("hypercube", {d});
  inst.graph = build_graph(n, edges);
  for (int x = 0; x < n; ++x) {
    std::string label;
    for (int bit = d - 1; bit >= 0; --bit)
      label += (x >> bit) & 1 ? '1' : '0';
    inst.vertex_labels.push_back(label);
  }
  std::vector<Edge> dim0;
  for (int x = 0; x < n; x += 2) dim0.push_back(make_edge(x, x | 1));
  inst.named_matchings["M_s"] = matching_from_edges(inst.graph, dim0);
  inst.expected.edge_count = d * (1 << (d - 1));
  inst.expected.statements["edges"] = "definition";
  // floor((1 - 1/d) * 2^(d-1))
  inst.expected.max_forcing_upper = ((d - 1) * (1 << (d - 1))) / d;
  inst.expected.statements["F_upper"] = "Cor3.4";
  return inst;
}

FamilyInstance gnk(int n, int k) {
  if (k < 2 || k > n - 1) throw InvalidParams("gnk needs 2 <= k <= n-1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k - 1; ++i) {
    edges.emplace_back(v_id(i, n), u_id(i, n));
    edges.emplace_back(v_id(i, n), u_id(i + 1, n));
  }
  edges.emplace_back(u_id(1, n), v_id(k + 1, n));
  for (int t = k; t <= n; ++t)
    for (int s = k; s <= n; ++s) {
      if (t == k && s == k + 1) continue;
      edges.emplace_back(u_id(t, n), v_id(s, n));
    }

  FamilyInstance inst;
  inst.name = param_name("gnk", {n, k});
  inst.graph = build_graph(2 * n, edges);
  inst.vertex_labels = uv_labels(n, n);

  std::vector<Edge> aligned;
  for (int i = 1; i <= n; ++i)
    aligned.push_back(make_edge(u_id(i, n), v_id(i, n)));
  inst.named_matchings["M"] = matching_from_edges(inst.graph, aligned);

  std::vector<Edge> shifted;
  for (int i = 1; i <= k; ++i)
    shifted.push_back(make_edge(v_id(i, n), u_id(i + 1, n)));
  shifted.push_back(make_edge(u_id(1, n), v_id(k + 1, n)));
  for (int i = k + 2; i <= n; ++i)
    shifted.push_back(make_edge(u_id(i, n), v_id(i, n)));
  inst.named_matchings["M_prime"] = matching_from_edges(inst.graph, shifted);

  inst.expected.max_forcing = n - k;
  inst.expected.statements["F"] = "Prop4.3(i)";
  return inst;
}

FamilyInstance nonbipartite_chain(const std::vector<int>& parts) {
  if (parts.size() < 2) throw InvalidParams("chain needs at least two parts");
  for (int p : parts)
    if (p < 2) throw InvalidParams("every chain part must be >= 2");
  int k = static_cast<int>(parts.size());
  int n = 0;
  for (int p : parts) n += p;

  std::vector<std::pair<int, int>> edges;
  std::vector<Edge> within, shifted;
  int offset = 0;  // indices offset+1 .. offset+parts[i] form block i+1
  for (int b = 0; b < k; ++b) {
    int size = parts[b];
    for (int i = 1; i <= size; ++i)
      for (int j = i + 1; j <= size; ++j) {
        edges.emplace_back(u_id(offset + i, n), u_id(offset + j, n));
        edges.emplace_back(v_id(offset + i, n), v_id(offset + j, n));
      }
    for (int i = 1; i <= size; ++i) {
      edges.emplace_back(u_id(offset + i, n), v_id(offset + i, n));
      within.push_back(make_edge(u_id(offset + i, n), v_id(offset + i, n)));
    }
    for (int i = 1; i <= size - 1; ++i) {
      edges.emplace_back(v_id(offset + i, n), u_id(offset + i + 1, n));
      shifted.push_back(make_edge(v_id(offset + i, n), u_id(offset + i + 1, n)));
    }
    offset += size;
  }
  // connectors: block ends to the next block's start, wrapping around
  int prefix = 0;
  std::vector<std::pair<int, int>> connectors{{v_id(n, n), u_id(1, n)}};
  for (int b = 0; b + 1 < k; ++b) {
    prefix += parts[b];
    connectors.emplace_back(v_id(prefix, n), u_id(prefix + 1, n));
  }
  for (const auto& [x, y] : connectors) {
    edges.emplace_back(x, y);
    shifted.push_back(make_edge(x, y));
  }

  FamilyInstance inst;
  std::vector<int> params = parts;
  inst.name = param_name("chain", params);
  inst.graph = build_graph(2 * n, edges);
  inst.vertex_labels = uv_labels(n, n);
  inst.named_matchings["M"] = matching_from_edges(inst.graph, within);
  inst.named_matchings["M_prime"] = matching_from_edges(inst.graph, shifted);
  inst.expected.max_forcing = n - k;
  inst.expected.statements["F"] = "Prop4.7";
  return inst;
}

FamilyInstance h_family(int n, int k) {
  if (k < 2 || n < k + 1 || n % k != 1)
    throw InvalidParams("h_family needs k >= 2 and n ≡ 1 (mod k), n >= k+1");
  int small = n / k;  // blocks 1..k-1; block k holds small+1 pairs

  std::vector<int> block_size(k, small);
  block_size[k - 1] = small + 1;
  std::vector<int> block_offset(k, 0);
  for (int b = 1; b < k; ++b)
    block_offset[b] = block_offset[b - 1] + block_size[b - 1];

  std::vector<std::pair<int, int>> edges;
  std::vector<Edge> within;
  for (int b = 0; b < k; ++b) {
    for (int i = 1; i <= block_size[b]; ++i)
      for (int j = 1; j <= block_size[b]; ++j)
        edges.emplace_back(u_id(block_offset[b] + i, n),
                           v_id(block_offset[b] + j, n));
    for (int i = 1; i <= block_size[b]; ++i)
      within.push_back(
          make_edge(u_id(block_offset[b] + i, n), v_id(block_offset[b] + i, n)));
  }
  // maximum matching from each block's u side to the next block's v side,
  // j-th smallest to j-th smallest; extra vertices of the big block stay out
  std::vector<Edge> connectors;
  for (int b = 0; b < k; ++b) {
    int nb = (b + 1) % k;
    int count = std::min(block_size[b], block_size[nb]);
    for (int j = 1; j <= count; ++j) {
      edges.emplace_back(u_id(block_offset[b] + j, n),
                         v_id(block_offset[nb] + j, n));
      connectors.push_back(make_edge(u_id(block_offset[b] + j, n),
                                     v_id(block_offset[nb] + j, n)));
    }
  }

  FamilyInstance inst;
  inst.name = param_name("hfam", {n, k});
  inst.graph = build_graph(2 * n, edges);
  inst.vertex_labels = uv_labels(n, n);
  inst.named_matchings["M"] = matching_from_edges(inst.graph, within);

  // the connectors miss exactly the big block's last u and last v, which the
  // block's completeness makes adjacent
  int last_u = u_id(block_offset[k - 1] + block_size[k - 1], n);
  int last_v = v_id(block_offset[k - 1] + block_size[k - 1], n);
  if (!inst.graph.has_edge(last_u, last_v))
    throw InternalInvariantViolation(
        "connector convention left non-adjacent vertices unsaturated");
  std::vector<Edge> shifted = connectors;
  shifted.push_back(make_edge(last_u, last_v));
  inst.named_matchings["M_prime"] = matching_from_edges(inst.graph, shifted);

  inst.expected.max_forcing = n - k;
  inst.expected.min_forcing = (n + k - 1) / k - 1;  // ceil(n/k) - 1
  inst.expected.statements["F"] = "Rem5.H";
  inst.expected.statements["f"] = "Rem5.H";
  return inst;
}

FamilyInstance gl_family(int n, int l) {
  if (n < 2 || l < 0 || l > n / 2 - 1)
    throw InvalidParams("gl_family needs n >= 2 and 0 <= l <= floor(n/2)-1");
  int a = (n + 1) / 2 + l;  // first block pairs 1..a, second a+1..n
  int x = (n % 2 == 1) ? 2 * l + 3 : 2 * l + 2;

  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j) edges.emplace_back(u_id(i, n), v_id(j, n));
  for (int i = a + 1; i <= n; ++i)
    for (int j = a + 1; j <= n; ++j) edges.emplace_back(u_id(i, n), v_id(j, n));

  // paired cross edges u_{x+r} v_{a+1+r}, v_{x+r} u_{a+1+r}; the list is
  // empty exactly when the second block is a single pair (x = a+1)
  std::vector<Edge> cross;
  for (int r = 0; r <= a - x; ++r) {
    cross.push_back(make_edge(u_id(x + r, n), v_id(a + 1 + r, n)));
    cross.push_back(make_edge(v_id(x + r, n), u_id(a + 1 + r, n)));
  }
  for (const Edge& e : cross) edges.emplace_back(e.a, e.b);

  FamilyInstance inst;
  inst.name = param_name("gl", {n, l});
  inst.graph = build_graph(2 * n, edges);
  inst.vertex_labels = uv_labels(n, n);
  inst.degenerate = cross.empty();

  std::vector<Edge> aligned;
  for (int i = 1; i <= n; ++i)
    aligned.push_back(make_edge(u_id(i, n), v_id(i, n)));
  inst.named_matchings["M_s"] = matching_from_edges(inst.graph, aligned);

  std::vector<Edge> proof = cross;
  for (int i = 1; i <= x - 1; ++i)
    proof.push_back(make_edge(u_id(i, n), v_id(i, n)));
  proof.push_back(make_edge(u_id(n, n), v_id(n, n)));
  inst.named_matchings["M_proof"] = matching_from_edges(inst.graph, proof);

  inst.expected.max_forcing = n - 2;
  inst.expected.min_forcing = (n + 1) / 2 + l - 1;  // ceil(n/2) + l - 1
  inst.expected.statements["F"] = "Sec5.Gl";
  inst.expected.statements["f"] = "Lem5.Gl";
  return inst;
}

FamilyInstance disjoint_union(const std::vector<FamilyInstance>& instances) {
  if (instances.empty()) throw InvalidParams("union of nothing");
  if (instances.size() == 1) return instances.front();

  FamilyInstance inst;
  inst.name = "union";
  std::vector<std::pair<int, int>> edges;
  int offset = 0;
  int total = 0;
  for (const FamilyInstance& comp : instances)
    total += comp.graph.vertex_count();
  if (total > Graph::kMaxVertices) throw TooLarge("union exceeds 64 vertices");

  std::map<std::string, std::vector<Edge>> matchings;
  for (const auto& [name, pm] : instances.front().named_matchings)
    matchings[name] = {};

  bool have_f = true, have_e = true;
  int sum_f = 0, sum_e = 0;
  for (std::size_t c = 0; c < instances.size(); ++c) {
    const FamilyInstance& comp = instances[c];
    inst.name += (c == 0 ? ":" : "+") + comp.name;
    for (const Edge& e : comp.graph.edges())
      edges.emplace_back(e.a + offset, e.b + offset);
    for (int v = 0; v < comp.graph.vertex_count(); ++v)
      inst.vertex_labels.push_back(std::to_string(c + 1) + ":" +
                                   comp.vertex_labels[v]);
    for (auto it = matchings.begin(); it != matchings.end();) {
      auto found = comp.named_matchings.find(it->first);
      if (found == comp.named_matchings.end()) {
        it = matchings.erase(it);  // only names shared by every component
        continue;
      }
      for (const Edge& e : found->second.edges)
        it->second.push_back(make_edge(e.a + offset, e.b + offset));
      ++it;
    }
    if (comp.expected.max_forcing)
      sum_f += *comp.expected.max_forcing;
    else
      have_f = false;
    if (comp.expected.edge_count)
      sum_e += *comp.expected.edge_count;
    else
      have_e = false;
    offset += comp.graph.vertex_count();
  }
  inst.graph = build_graph(total, edges);
  for (auto& [name, medges] : matchings)
    inst.named_matchings[name] = matching_from_edges(inst.graph, medges);
  if (have_f) {
    inst.expected.max_forcing = sum_f;
    inst.expected.statements["F"] = "Rem3.3";
  }
  if (have_e) {
    inst.expected.edge_count = sum_e;
    inst.expected.statements["edges"] = "Rem3.3";
  }
  return inst;
}

FamilyInstance random_bipartite_with_pm(int n, const Rational& edge_prob,
                                        std::uint64_t seed) {
  if (n < 1) throw InvalidParams("random family needs n >= 1");
  if (edge_prob < Rational(0) || edge_prob > Rational(1))
    throw InvalidParams("edge probability outside [0, 1]");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<Edge> planted;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(u_id(i, n), v_id(i, n));
    planted.push_back(make_edge(u_id(i, n), v_id(i, n)));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      std::uint64_t r = rng();
      // keep iff floor(r * den / 2^64) < num, an exact num/den coin
      auto scaled = static_cast<unsigned __int128>(r) *
                    static_cast<std::uint64_t>(edge_prob.den);
      if (static_cast<std::uint64_t>(scaled >> 64) <
          static_cast<std::uint64_t>(edge_prob.num))
        edges.emplace_back(u_id(i, n), v_id(j, n));
    }

  FamilyInstance inst;
  inst.name = "random(" + std::to_string(n) + "," + edge_prob.str() + ";" +
              std::to_string(seed) + ")";
  inst.graph = build_graph(2 * n, edges);
  inst.vertex_labels = uv_labels(n, n);
  inst.named_matchings["M_s"] = matching_from_edges(inst.graph, planted);
  return inst;
}

}  // namespace forcing
