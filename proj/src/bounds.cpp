#include "forcing/bounds.hpp"

#include <algorithm>
#include <string>

namespace forcing {

namespace {

GraphSummary summarize(const Graph& g, const SpectrumReport& spectrum) {
  GraphSummary s;
  s.pair_count = g.vertex_count() / 2;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  s.min_deg = min_degree(g);
  s.max_forcing = spectrum.f_max;
  s.min_forcing = spectrum.f_min;
  return s;
}

bool is_complete_balanced_bipartite(const Graph& g) {
  if (!g.is_bipartite()) return false;
  const Bipartition& parts = *g.bipartition();
  if (parts.side_a.count() != parts.side_b.count()) return false;
  for (Vertex a : parts.side_a.to_vector())
    for (Vertex b : parts.side_b.to_vector())
      if (!g.has_edge(a, b)) return false;
  return true;
}

BoundReport edge_bound(const Graph& g, const SpectrumReport& spectrum) {
  BoundReport r;
  r.statement_id = "Thm3.1";
  r.summary = summarize(g, spectrum);
  long long n = r.summary.pair_count;
  long long k = n - spectrum.f_max;
  r.lhs = Rational(r.summary.edge_count);
  r.rhs = Rational(n * n, k);
  r.holds = r.lhs >= r.rhs;
  r.tight = r.lhs == r.rhs;
  return r;
}

BoundReport regular_bound(const Graph& g, const SpectrumReport& spectrum) {
  int r_deg = min_degree(g);
  if (r_deg != max_degree(g))
    throw NotRegular("regular bound on an irregular graph");
  BoundReport r;
  r.statement_id = "Cor3.3";
  r.summary = summarize(g, spectrum);
  r.lhs = Rational(spectrum.f_max);
  r.rhs = Rational(static_cast<long long>(r_deg - 1) * g.vertex_count(),
                   2LL * r_deg);
  r.holds = r.lhs <= r.rhs;
  r.tight = r.lhs == r.rhs;
  return r;
}

BoundReport maxforcing_characterization(const Graph& g,
                                        const SpectrumReport& spectrum) {
  BoundReport r;
  r.statement_id = "Cor2.2";
  r.summary = summarize(g, spectrum);
  bool extremal = spectrum.f_max == r.summary.pair_count - 1;
  bool structural = is_complete_balanced_bipartite(g);
  r.lhs = Rational(spectrum.f_max);
  r.rhs = Rational(r.summary.pair_count - 1);
  r.holds = extremal == structural;
  r.tight = extremal;
  r.detail = structural ? "complete-balanced" : "not-complete";
  return r;
}

BoundReport spectrum_gaps(const Graph& g, const SpectrumReport& spectrum) {
  BoundReport r;
  r.statement_id = "Cor4.9";
  r.summary = summarize(g, spectrum);
  int k = r.summary.pair_count - spectrum.f_max;
  int max_diff = 0;
  bool continuous = true;
  for (std::size_t i = 1; i < spectrum.spectrum.size(); ++i) {
    int diff = spectrum.spectrum[i] - spectrum.spectrum[i - 1];
    max_diff = std::max(max_diff, diff);
    if (diff != 1) continuous = false;
  }
  r.lhs = Rational(max_diff);
  r.rhs = Rational(k);
  r.holds = max_diff <= k;
  r.tight = max_diff == k;
  r.detail = continuous ? "continuous" : "gapped";
  return r;
}

std::vector<BoundReport> minforcing_bounds(const Graph& g,
                                           const SpectrumReport& spectrum) {
  GraphSummary s = summarize(g, spectrum);
  int n = s.pair_count;
  int f = spectrum.f_min;
  bool near_extremal = spectrum.f_max == n - 2;

  std::vector<BoundReport> out;
  {
    BoundReport r;
    r.statement_id = "Thm5.1";
    r.summary = s;
    r.applicable = near_extremal;
    r.lhs = Rational(f);
    r.rhs = Rational((n + 1) / 2 - 1);
    r.holds = !r.applicable || r.lhs >= r.rhs;
    r.tight = r.applicable && r.lhs == r.rhs;
    if (!r.applicable) r.detail = "needs F = n-2";
    out.push_back(r);
  }
  {
    BoundReport r;
    r.statement_id = "Lem5.2";
    r.summary = s;
    r.lhs = Rational(f);
    r.rhs = Rational(n - max_unique_pm_induced_order(g) / 2);
    r.holds = r.lhs >= r.rhs;
    r.tight = r.lhs == r.rhs;
    out.push_back(r);
  }
  {
    BoundReport r;
    r.statement_id = "Cor5.3";
    r.summary = s;
    r.applicable = near_extremal;
    r.lhs = Rational(f);
    r.rhs = Rational(n - 1 - s.min_deg);
    r.holds = !r.applicable || r.lhs >= r.rhs;
    r.tight = r.applicable && r.lhs == r.rhs;
    if (!r.applicable) r.detail = "needs F = n-2";
    out.push_back(r);
  }
  {
    BoundReport r;
    r.statement_id = "Lem5.4";
    r.summary = s;
    r.lhs = Rational(f);
    r.rhs = Rational(s.min_deg - 1);
    r.holds = r.lhs >= r.rhs;
    r.tight = r.lhs == r.rhs;
    out.push_back(r);
  }
  return out;
}

BoundReport problem55(const Graph& g, const SpectrumReport& spectrum) {
  BoundReport r;
  r.statement_id = "Prob5.5";
  r.summary = summarize(g, spectrum);
  int n = r.summary.pair_count;
  int k = n - spectrum.f_max;
  r.lhs = Rational(spectrum.f_min);
  r.rhs = Rational((n + k - 1) / k - 1);  // ceil(n/k) - 1
  r.holds = r.lhs >= r.rhs;
  r.tight = r.lhs == r.rhs;
  r.detail = "CONJECTURE-PROBE";
  return r;
}

void require_bipartite(const Graph& g, const char* who) {
  if (!g.is_bipartite())
    throw NotBipartite(std::string(who) + " needs a bipartite graph");
}

}  // namespace

BoundReport verify_edge_bound(const Graph& g) {
  return edge_bound(g, forcing_spectrum(g));
}

BoundReport verify_regular_bound(const Graph& g) {
  if (min_degree(g) != max_degree(g))
    throw NotRegular("regular bound on an irregular graph");
  return regular_bound(g, forcing_spectrum(g));
}

Rational hypercube_upper_bound(int d) {
  if (d < 1) throw InvalidParams("hypercube bound needs d >= 1");
  return Rational(static_cast<long long>(d - 1) * (1LL << (d - 1)), d);
}

BoundReport verify_bipartite_maxforcing_characterization(const Graph& g) {
  require_bipartite(g, "maximum forcing characterization");
  return maxforcing_characterization(g, forcing_spectrum(g));
}

BoundReport verify_spectrum_gaps(const Graph& g) {
  require_bipartite(g, "spectrum gap bound");
  return spectrum_gaps(g, forcing_spectrum(g));
}

std::vector<BoundReport> verify_minforcing_lower_bounds(const Graph& g) {
  require_bipartite(g, "minimum forcing bounds");
  return minforcing_bounds(g, forcing_spectrum(g));
}

BoundReport probe_problem55(const Graph& g) {
  require_bipartite(g, "conjecture probe");
  return problem55(g, forcing_spectrum(g));
}

std::vector<BoundReport> verify_all(const Graph& g) {
  SpectrumReport spectrum = forcing_spectrum(g);
  std::vector<BoundReport> out;
  out.push_back(edge_bound(g, spectrum));
  if (min_degree(g) == max_degree(g)) out.push_back(regular_bound(g, spectrum));
  if (g.is_bipartite()) {
    out.push_back(maxforcing_characterization(g, spectrum));
    out.push_back(spectrum_gaps(g, spectrum));
    for (BoundReport& r : minforcing_bounds(g, spectrum))
      out.push_back(std::move(r));
    out.push_back(problem55(g, spectrum));
  }
  return out;
}

}  // namespace forcing
