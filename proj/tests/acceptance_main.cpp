// Acceptance suite: runs every gate criterion end to end, prints one
// PASS/FAIL line per criterion on stdout (timing goes to stderr), and exits
// with the number of failures.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forcing/bounds.hpp"
#include "forcing/corpus.hpp"
#include "forcing/io.hpp"
#include "forcing/switching.hpp"
#include "oracles.hpp"

using namespace forcing;

namespace {

struct Suite {
  std::vector<CorpusEntry> corpus;           // enumerated <= 10 + families <= 16 + 200 random
  std::vector<Graph> enumerated;             // connected bipartite, <= 10 vertices
  std::map<std::string, SpectrumReport> spectra;

  const SpectrumReport& spectrum_of(const Graph& g) {
    std::string key = write_edge_list(g);
    auto it = spectra.find(key);
    if (it == spectra.end())
      it = spectra.emplace(key, forcing_spectrum(g)).first;
    return it->second;
  }
};

using Criterion = bool (*)(Suite&, std::string&);

bool criterion_max_forcing_characterization(Suite& suite, std::string& note) {
  // F(G) = n-1 iff structurally complete balanced, over the whole
  // enumerated corpus
  int checked = 0, extremal = 0;
  for (const Graph& g : suite.enumerated) {
    BoundReport r = verify_bipartite_maxforcing_characterization(g);
    if (!r.holds) {
      note = "violated on a " + std::to_string(g.vertex_count()) +
             "-vertex graph";
      return false;
    }
    ++checked;
    extremal += r.tight;
  }
  note = "biconditional on " + std::to_string(checked) + " graphs, " +
         std::to_string(extremal) + " extremal";
  return true;
}

bool criterion_edge_bound(Suite& suite, std::string& note) {
  int checked = 0, tight = 0;
  for (const CorpusEntry& entry : suite.corpus) {
    if (!has_perfect_matching(entry.graph)) continue;
    const SpectrumReport& spectrum = suite.spectrum_of(entry.graph);
    long long n = entry.graph.vertex_count() / 2;
    long long k = n - spectrum.f_max;
    // integer form: e(G) * k >= n^2, zero tolerance
    long long lhs = static_cast<long long>(entry.graph.edge_count()) * k;
    if (lhs < n * n) {
      note = "violated on " + entry.id;
      return false;
    }
    ++checked;
    tight += lhs == n * n;
  }
  // sharpness instances: k copies of K_{s,s} for (n,k) in
  // {(2,1),(4,2),(6,3),(6,2)}
  for (auto [pairs, copies] : std::vector<std::pair<int, int>>{
           {2, 1}, {4, 2}, {6, 3}, {6, 2}}) {
    int s = pairs / copies;
    FamilyInstance inst = disjoint_union(
        std::vector<FamilyInstance>(copies, complete_bipartite(s, s)));
    const SpectrumReport& spectrum = suite.spectrum_of(inst.graph);
    long long n = pairs;
    long long k = n - spectrum.f_max;
    if (k != copies ||
        static_cast<long long>(inst.graph.edge_count()) * k != n * n) {
      note = "sharpness failed on " + inst.name;
      return false;
    }
  }
  note = "holds on " + std::to_string(checked) + " graphs (" +
         std::to_string(tight) + " tight), sharp on all 4 union instances";
  return true;
}

bool criterion_gnk(Suite&, std::string& note) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{
           {3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
    auto started = std::chrono::steady_clock::now();
    FamilyInstance inst = gnk(n, k);
    SpectrumReport spectrum = forcing_spectrum(inst.graph);
    if (spectrum.f_max != n - k) {
      note = inst.name + ": F = " + std::to_string(spectrum.f_max) +
             " != " + std::to_string(n - k);
      return false;
    }
    const PerfectMatching& m = inst.named_matchings.at("M");
    const PerfectMatching& mp = inst.named_matchings.at("M_prime");
    if (switch_reachable(inst.graph, m, mp, k).has_value()) {
      note = inst.name + ": reachable under cap k";
      return false;
    }
    auto seq = switch_reachable(inst.graph, m, mp, k + 1);
    if (!seq || !validate_switch_sequence(inst.graph, *seq, m, mp)) {
      note = inst.name + ": unreachable under cap k+1";
      return false;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    if (elapsed >= 10000) {
      note = inst.name + " took " + std::to_string(elapsed) + " ms";
      return false;
    }
  }
  note = "F = n-k and the cap-k/cap-(k+1) dichotomy on all 5 instances";
  return true;
}

bool criterion_bounded_switches(Suite& suite, std::string& note) {
  long long pairs_checked = 0;
  int graphs_checked = 0;
  for (const CorpusEntry& entry : suite.corpus) {
    const Graph& g = entry.graph;
    if (!g.is_bipartite() || g.vertex_count() > 12) continue;
    if (!has_perfect_matching(g)) continue;
    const SpectrumReport& spectrum = suite.spectrum_of(g);
    int n = g.vertex_count() / 2;
    int k = n - spectrum.f_max;
    ++graphs_checked;

    // oracle verdict first: the capped switch graph must be connected
    std::vector<const PerfectMatching*> pms;
    for (const auto& [pm, f] : spectrum.per_matching) pms.push_back(&pm);
    std::map<std::vector<Edge>, int> index;
    for (std::size_t i = 0; i < pms.size(); ++i) index[pms[i]->edges] = i;
    std::vector<int> component(pms.size(), -1);
    int components = 0;
    for (std::size_t root = 0; root < pms.size(); ++root) {
      if (component[root] != -1) continue;
      component[root] = components;
      std::vector<int> stack{static_cast<int>(root)};
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const AlternatingCycle& c :
             enumerate_alternating_cycles(g, *pms[cur], k + 1)) {
          int nb = index.at(apply_switch(*pms[cur], c).edges);
          if (component[nb] == -1) {
            component[nb] = components;
            stack.push_back(nb);
          }
        }
      }
      ++components;
    }
    if (components != 1) {
      note = entry.id + ": capped switch graph disconnected";
      return false;
    }

    for (const PerfectMatching* target : pms)
      for (const PerfectMatching* start : pms) {
        SwitchSequence seq = switch_sequence_bounded(g, *target, *start, k);
        if (!validate_switch_sequence(g, seq, *start, *target)) {
          note = entry.id + ": replay failed";
          return false;
        }
        for (const SwitchStep& step : seq.steps)
          if (step.cycle.half_length() > k + 1) {
            note = entry.id + ": cap exceeded";
            return false;
          }
        ++pairs_checked;
      }
  }
  note = std::to_string(pairs_checked) + " ordered pairs on " +
         std::to_string(graphs_checked) + " graphs, all replayed within cap";
  return true;
}

bool criterion_chain(Suite&, std::string& note) {
  for (const std::vector<int>& parts :
       {std::vector<int>{2, 2}, std::vector<int>{2, 3}}) {
    FamilyInstance inst = nonbipartite_chain(parts);
    int n = inst.graph.vertex_count() / 2;
    int k = static_cast<int>(parts.size());
    SpectrumReport spectrum = forcing_spectrum(inst.graph);
    if (spectrum.f_max != n - k) {
      note = inst.name + ": F != n-k";
      return false;
    }
    const PerfectMatching& m = inst.named_matchings.at("M");
    const PerfectMatching& mp = inst.named_matchings.at("M_prime");
    if (switch_reachable(inst.graph, mp, m, k + 1).has_value()) {
      note = inst.name + ": reachable under cap k+1";
      return false;
    }
    PerfectMatching cur = mp;
    for (const AlternatingCycle& c : symmetric_difference_cycles(mp, m))
      cur = apply_switch(cur, c);
    if (cur != m) {
      note = inst.name + ": unbounded decomposition failed";
      return false;
    }
  }
  note = "F = n-k, pair unreachable under cap k+1, unbounded switch works";
  return true;
}

bool criterion_switch_distance(Suite& suite, std::string& note) {
  long long checked = 0;
  for (const CorpusEntry& entry : suite.corpus) {
    const Graph& g = entry.graph;
    if (g.vertex_count() > 10 || !has_perfect_matching(g)) continue;
    const SpectrumReport& spectrum = suite.spectrum_of(g);
    std::map<std::vector<Edge>, int> forcing_of;
    for (const auto& [pm, f] : spectrum.per_matching) forcing_of[pm.edges] = f;
    for (const auto& [pm, f] : spectrum.per_matching) {
      for (const AlternatingCycle& c : enumerate_alternating_cycles(g, pm)) {
        int after = forcing_of.at(apply_switch(pm, c).edges);
        if (std::abs(after - f) > c.half_length() - 1) {
          note = entry.id + ": forcing number jumped by " +
                 std::to_string(std::abs(after - f)) + " across a " +
                 std::to_string(c.half_length()) + "-switch";
          return false;
        }
        ++checked;
      }
      if (checked >= 4000) break;
    }
    if (checked >= 4000) break;
  }
  if (checked < 500) {
    note = "only " + std::to_string(checked) + " triples available";
    return false;
  }
  note = std::to_string(checked) + " (graph, matching, cycle) triples held";
  return true;
}

bool criterion_section5_families(Suite& suite, std::string& note) {
  for (auto [n, k] :
       std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {4, 3}}) {
    FamilyInstance inst = h_family(n, k);
    SpectrumReport spectrum = forcing_spectrum(inst.graph);
    int want_f = (n + k - 1) / k - 1;
    if (spectrum.f_max != n - k || spectrum.f_min != want_f) {
      note = inst.name + ": (f, F) = (" + std::to_string(spectrum.f_min) +
             ", " + std::to_string(spectrum.f_max) + ")";
      return false;
    }
    if (min_degree(inst.graph) != (n + k - 1) / k) {
      note = inst.name + ": min degree off";
      return false;
    }
  }
  for (auto [n, l] : std::vector<std::pair<int, int>>{
           {5, 0}, {5, 1}, {7, 0}, {7, 1}}) {
    FamilyInstance inst = gl_family(n, l);
    SpectrumReport spectrum = forcing_spectrum(inst.graph);
    int want_f = (n + 1) / 2 + l - 1;
    if (spectrum.f_max != n - 2 || spectrum.f_min != want_f) {
      note = inst.name + ": (f, F) = (" + std::to_string(spectrum.f_min) +
             ", " + std::to_string(spectrum.f_max) + ")";
      return false;
    }
    if (min_degree(inst.graph) != n / 2 - l) {
      note = inst.name + ": min degree off";
      return false;
    }
  }
  // every expected value carried by the whole family grid must verify
  int grid_checks = 0;
  for (const FamilyInstance& inst : family_corpus(16)) {
    if (!has_perfect_matching(inst.graph)) continue;
    const SpectrumReport& spectrum = suite.spectrum_of(inst.graph);
    if (inst.expected.edge_count &&
        inst.graph.edge_count() != *inst.expected.edge_count) {
      note = inst.name + ": edge count off";
      return false;
    }
    if (inst.expected.max_forcing &&
        spectrum.f_max != *inst.expected.max_forcing) {
      note = inst.name + ": F off";
      return false;
    }
    if (inst.expected.min_forcing &&
        spectrum.f_min != *inst.expected.min_forcing) {
      note = inst.name + ": f off";
      return false;
    }
    if (inst.expected.max_forcing_upper &&
        spectrum.f_max > *inst.expected.max_forcing_upper) {
      note = inst.name + ": F above its bound";
      return false;
    }
    for (const auto& [name, pm] : inst.named_matchings)
      if (!is_valid_matching(inst.graph, pm)) {
        note = inst.name + ": named matching " + name + " invalid";
        return false;
      }
    ++grid_checks;
  }
  note = "exact f, F and min degree on hfam(3,2),(5,2),(4,3) and "
         "gl(5,0),(5,1),(7,0),(7,1); expected values verified on " +
         std::to_string(grid_checks) + " grid instances";
  return true;
}

bool criterion_minforcing_bounds(Suite& suite, std::string& note) {
  int applicable_checks = 0, crosschecked = 0;
  for (const CorpusEntry& entry : suite.corpus) {
    const Graph& g = entry.graph;
    if (!g.is_bipartite() || !has_perfect_matching(g)) continue;
    const SpectrumReport& spectrum = suite.spectrum_of(g);
    int n = g.vertex_count() / 2;
    int f = spectrum.f_min;
    int delta = min_degree(g);
    bool near_extremal = spectrum.f_max == n - 2;

    if (f < delta - 1) {
      note = entry.id + ": min bound under the degree bound";
      return false;
    }
    ++applicable_checks;
    if (near_extremal) {
      if (f < (n + 1) / 2 - 1 || f < n - 1 - delta) {
        note = entry.id + ": near-extremal lower bounds violated";
        return false;
      }
      applicable_checks += 2;
    }
    if (g.vertex_count() <= 12) {
      int order = max_unique_pm_induced_order(g);
      if (f < n - order / 2) {
        note = entry.id + ": unique-induced-order bound violated";
        return false;
      }
      ++crosschecked;
    }
  }
  note = std::to_string(applicable_checks) + " bound checks, " +
         std::to_string(crosschecked) + " induced-order cross-checks";
  return true;
}

bool criterion_hypercube(Suite& suite, std::string& note) {
  FamilyInstance q2 = hypercube(2);
  const SpectrumReport& s2 = suite.spectrum_of(q2.graph);
  if (s2.f_max != 1 || hypercube_upper_bound(2) != Rational(1)) {
    note = "Q_2: F = " + std::to_string(s2.f_max);
    return false;
  }
  FamilyInstance q3 = hypercube(3);
  const SpectrumReport& s3 = suite.spectrum_of(q3.graph);
  if (s3.f_max > 2) {
    note = "Q_3: F = " + std::to_string(s3.f_max) + " > 2";
    return false;
  }
  FamilyInstance q4 = hypercube(4);
  const SpectrumReport& s4 = suite.spectrum_of(q4.graph);
  if (s4.f_max > 6) {
    note = "Q_4: F = " + std::to_string(s4.f_max) + " > 6";
    return false;
  }
  note = "F(Q_2) = 1 attains the bound; F(Q_3) = " + std::to_string(s3.f_max) +
         " <= 2; F(Q_4) = " + std::to_string(s4.f_max) + " <= 6";
  return true;
}

bool criterion_transversal_equivalence(Suite& suite, std::string& note) {
  // on >= 200 (graph, matching) pairs, the transversal predicate agrees
  // with the definitional unique-matching check for every subset of size <= 3
  int pairs_checked = 0;
  for (const CorpusEntry& entry : suite.corpus) {
    const Graph& g = entry.graph;
    if (g.vertex_count() > 10 || !has_perfect_matching(g)) continue;
    const SpectrumReport& spectrum = suite.spectrum_of(g);
    for (const auto& [pm, f] : spectrum.per_matching) {
      auto cycles = enumerate_alternating_cycles(g, pm);
      int n = pm.pair_count();
      for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (std::popcount(mask) > 3) continue;
        std::vector<Edge> subset;
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1) subset.push_back(pm.edges[i]);
        bool hits_all = true;
        for (const AlternatingCycle& c : cycles) {
          bool hit = false;
          for (const Edge& e : c.edge_list()) {
            if (!pm.contains(e)) continue;
            for (const Edge& s : subset)
              if (s == e) {
                hit = true;
                break;
              }
            if (hit) break;
          }
          if (!hit) {
            hits_all = false;
            break;
          }
        }
        if (hits_all != is_forcing_set(g, pm, subset)) {
          note = entry.id + ": transversal and definitional checks disagree";
          return false;
        }
      }
      ++pairs_checked;
      if (pairs_checked >= 400) break;
    }
    if (pairs_checked >= 400) break;
  }
  if (pairs_checked < 200) {
    note = "only " + std::to_string(pairs_checked) + " pairs checked";
    return false;
  }
  note = std::to_string(pairs_checked) +
         " (graph, matching) pairs, all subsets up to size 3 agree";
  return true;
}

bool criterion_interval_report(Suite& suite, std::string& note) {
  std::ostringstream report;
  for (int n : {4, 6}) {
    std::set<int> attained;
    for (const CorpusEntry& entry : suite.corpus) {
      const Graph& g = entry.graph;
      if (g.vertex_count() != 2 * n || !g.is_bipartite()) continue;
      if (!has_perfect_matching(g)) continue;
      const SpectrumReport& spectrum = suite.spectrum_of(g);
      if (spectrum.f_max == n - 2) attained.insert(spectrum.f_min);
    }
    int corollary_low = (n + 1) / 2 - 1;  // ceil(n/2) - 1
    int abstract_low = n / 2;             // the looser published variant
    for (int f : attained)
      if (f < corollary_low || f > n - 2) {
        note = "n = " + std::to_string(n) + ": f = " + std::to_string(f) +
               " escapes [" + std::to_string(corollary_low) + ", " +
               std::to_string(n - 2) + "]";
        return false;
      }
    report << "n=" << n << " attained {";
    bool first = true;
    for (int f : attained) {
      report << (first ? "" : ",") << f;
      first = false;
    }
    report << "}";
    bool below_abstract = !attained.empty() && *attained.begin() < abstract_low;
    report << (below_abstract ? " (below the abstract interval variant)"
                              : " (consistent with both variants)");
    report << "; ";
  }
  note = report.str() + "all inside the in-text interval";
  return true;
}

}  // namespace

int main() {
  auto wall_start = std::chrono::steady_clock::now();
  Suite suite;
  suite.enumerated = enumerate_connected_bipartite_pm_graphs(10);
  suite.corpus = full_corpus(10, 16, 200, 1000);
  std::cerr << "corpus: " << suite.enumerated.size()
            << " enumerated graphs, " << suite.corpus.size()
            << " total entries\n";

  struct Entry {
    int id;
    const char* label;
    Criterion run;
  };
  std::vector<Entry> criteria = {
      {1, "max-forcing characterization biconditional",
       criterion_max_forcing_characterization},
      {2, "edge count lower bound with sharpness", criterion_edge_bound},
      {3, "witness family forcing values and switch dichotomy",
       criterion_gnk},
      {4, "bounded switch construction on every ordered pair",
       criterion_bounded_switches},
      {5, "non-bipartite chain: values and unreachability",
       criterion_chain},
      {6, "switch moves the forcing number by at most l-1",
       criterion_switch_distance},
      {7, "ring and two-block family values", criterion_section5_families},
      {8, "minimum forcing lower bounds on the corpus",
       criterion_minforcing_bounds},
      {9, "hypercube upper bounds", criterion_hypercube},
      {10, "transversal vs definitional forcing checks",
       criterion_transversal_equivalence},
      {11, "attainable minimum forcing interval report",
       criterion_interval_report},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    auto started = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = entry.run(suite, note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << entry.id << ": "
              << entry.label << " -- " << note << "\n";
    std::cerr << "criterion " << entry.id << " took " << ms << " ms\n";
    failures += !ok;
  }
  auto total = std::chrono::duration_cast<std::chrono::seconds>(
                   std::chrono::steady_clock::now() - wall_start)
                   .count();
  std::cerr << "total " << total << " s\n";
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures;
}
