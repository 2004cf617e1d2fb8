#include "forcing/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forcing/bounds.hpp"
#include "forcing/corpus.hpp"
#include "forcing/io.hpp"
#include "forcing/switching.hpp"

namespace forcing {

namespace {

struct DomainExit {
  int code;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

PerfectMatching load_matching(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matching file '" + path + "'");
  return read_matching(g, in);
}

std::string plain_label(Vertex v) { return std::to_string(v + 1); }

std::string label_of(const std::vector<std::string>& labels, Vertex v) {
  if (v < static_cast<int>(labels.size())) return labels[v];
  return plain_label(v);
}

std::string cycle_human(const AlternatingCycle& c,
                        const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += " ";
    out += label_of(labels, c.vertices[i]);
  }
  return out;
}

std::string matching_human(const PerfectMatching& m,
                           const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (i) out += " ";
    out += label_of(labels, m.edges[i].a) + "-" + label_of(labels, m.edges[i].b);
  }
  return out;
}

void print_sequence_human(std::ostream& out, const SwitchSequence& seq,
                          const std::vector<std::string>& labels) {
  out << "steps " << seq.length() << " cap " << seq.half_length_cap << "\n";
  for (int i = 0; i < seq.length(); ++i) {
    const SwitchStep& step = seq.steps[i];
    out << "step " << i + 1 << ": " << step.cycle.half_length()
        << "-switch along " << cycle_human(step.cycle, labels) << "\n";
    out << "  before: " << matching_human(step.before, labels) << "\n";
    out << "  after:  " << matching_human(step.after, labels) << "\n";
  }
}

long long parse_ll(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw InvalidParams(std::string("expected an integer for ") + what +
                        ", got '" + tok + "'");
  }
}

// accepts "2/3", "0.25" or "1"
Rational parse_rational(const std::string& tok) {
  if (auto slash = tok.find('/'); slash != std::string::npos)
    return Rational(parse_ll(tok.substr(0, slash), "numerator"),
                    parse_ll(tok.substr(slash + 1), "denominator"));
  if (auto dot = tok.find('.'); dot != std::string::npos) {
    std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = dot + 1; i < tok.size(); ++i) den *= 10;
    return Rational(parse_ll(digits, "decimal"), den);
  }
  return Rational(parse_ll(tok, "probability"));
}

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;
  std::map<std::string, PerfectMatching> named;
  bool from_family = false;
};

FamilyInstance make_family(const std::string& family,
                           const std::vector<std::string>& params,
                           std::uint64_t seed);

LoadedGraph resolve_graph(const std::string& path,
                          const std::vector<std::string>& family,
                          std::uint64_t seed) {
  if (!family.empty()) {
    FamilyInstance inst = make_family(
        family[0], {family.begin() + 1, family.end()}, seed);
    return LoadedGraph{std::move(inst.graph), std::move(inst.vertex_labels),
                       std::move(inst.named_matchings), true};
  }
  if (path.empty())
    throw InvalidParams("give a graph file or --family <name> <params...>");
  return LoadedGraph{load_graph(path), {}, {}, false};
}

// file path normally; a named matching of the instance under --family
PerfectMatching resolve_matching(const LoadedGraph& lg,
                                 const std::string& arg) {
  if (arg.empty()) throw InvalidParams("missing a matching argument");
  if (lg.from_family) {
    auto it = lg.named.find(arg);
    if (it == lg.named.end())
      throw InvalidParams("instance has no matching named '" + arg + "'");
    return it->second;
  }
  return load_matching(lg.graph, arg);
}

FamilyInstance make_family(const std::string& family,
                           const std::vector<std::string>& params,
                           std::uint64_t seed) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw InvalidParams("family '" + family + "' takes " +
                          std::to_string(count) + " parameter(s)");
  };
  if (family == "knn") {
    if (params.size() == 1) {
      long long n = parse_ll(params[0], "n");
      return complete_bipartite(static_cast<int>(n), static_cast<int>(n));
    }
    want(2);
    return complete_bipartite(static_cast<int>(parse_ll(params[0], "a")),
                              static_cast<int>(parse_ll(params[1], "b")));
  }
  if (family == "hypercube") {
    want(1);
    return hypercube(static_cast<int>(parse_ll(params[0], "d")));
  }
  if (family == "gnk") {
    want(2);
    return gnk(static_cast<int>(parse_ll(params[0], "n")),
               static_cast<int>(parse_ll(params[1], "k")));
  }
  if (family == "chain") {
    if (params.empty()) throw InvalidParams("chain needs its part sizes");
    std::vector<int> parts;
    for (const std::string& p : params)
      parts.push_back(static_cast<int>(parse_ll(p, "part")));
    return nonbipartite_chain(parts);
  }
  if (family == "hfam") {
    want(2);
    return h_family(static_cast<int>(parse_ll(params[0], "n")),
                    static_cast<int>(parse_ll(params[1], "k")));
  }
  if (family == "gl") {
    want(2);
    return gl_family(static_cast<int>(parse_ll(params[0], "n")),
                     static_cast<int>(parse_ll(params[1], "l")));
  }
  if (family == "union-knn") {
    want(2);
    int copies = static_cast<int>(parse_ll(params[0], "copies"));
    int size = static_cast<int>(parse_ll(params[1], "size"));
    if (copies < 1) throw InvalidParams("union-knn needs copies >= 1");
    return disjoint_union(std::vector<FamilyInstance>(
        copies, complete_bipartite(size, size)));
  }
  if (family == "random") {
    want(2);
    return random_bipartite_with_pm(
        static_cast<int>(parse_ll(params[0], "n")), parse_rational(params[1]),
        seed);
  }
  throw InvalidParams("unknown family '" + family + "'");
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (out.empty() || out.back() != '-')
      out += '-';
  }
  if (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

int spectrum_exit(const Graph& g, const std::string& format,
                  std::ostream& out) {
  SpectrumReport report = forcing_spectrum(g);
  if (format == "json") {
    out << spectrum_json(report).dump(2) << "\n";
  } else if (format == "tsv") {
    out << "f\tF\tspectrum\tgaps\n";
    out << report.f_min << "\t" << report.f_max << "\t";
    for (std::size_t i = 0; i < report.spectrum.size(); ++i)
      out << (i ? "," : "") << report.spectrum[i];
    out << "\t";
    if (report.gaps.empty()) out << "-";
    for (std::size_t i = 0; i < report.gaps.size(); ++i)
      out << (i ? ";" : "") << report.gaps[i].first << "-"
          << report.gaps[i].second;
    out << "\n";
  } else {
    out << "f=" << report.f_min << " F=" << report.f_max << " spectrum={";
    for (std::size_t i = 0; i < report.spectrum.size(); ++i)
      out << (i ? "," : "") << report.spectrum[i];
    out << "}";
    if (!report.gaps.empty()) {
      out << " gaps=";
      for (std::size_t i = 0; i < report.gaps.size(); ++i)
        out << (i ? ";" : "") << report.gaps[i].first << ".."
            << report.gaps[i].second;
    }
    out << "\n";
  }
  return 0;
}

// exit 3 when a proven statement fails; the open probe never counts
int reports_exit(const std::vector<BoundReport>& reports,
                 const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const BoundReport& r : reports) arr.push_back(report_json(r));
    out << arr.dump(2) << "\n";
  } else {
    out << reports_tsv(reports);
  }
  for (const BoundReport& r : reports)
    if (r.applicable && !r.holds && r.statement_id != "Prob5.5") return 3;
  return 0;
}

void cmd_gen(const std::string& family, const std::vector<std::string>& params,
             std::uint64_t seed, const std::string& out_dir, bool emit_json,
             std::ostream& out) {
  FamilyInstance inst = make_family(family, params, seed);
  std::string base = out_dir + "/" + sanitize(inst.name);

  auto write_file = [](const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << content;
  };
  write_file(base + ".graph", write_edge_list(inst.graph));
  for (const auto& [name, pm] : inst.named_matchings)
    write_file(base + "." + name + ".matching", write_matching(pm));
  write_file(base + ".json", instance_json(inst).dump(2) + "\n");

  out << inst.name << ": " << inst.graph.vertex_count() << " vertices, "
      << inst.graph.edge_count() << " edges -> " << base << ".graph\n";
  for (const auto& [quantity, id] : inst.expected.statements) {
    out << "  expected " << quantity;
    if (quantity == "F" && inst.expected.max_forcing)
      out << " = " << *inst.expected.max_forcing;
    if (quantity == "f" && inst.expected.min_forcing)
      out << " = " << *inst.expected.min_forcing;
    if (quantity == "edges" && inst.expected.edge_count)
      out << " = " << *inst.expected.edge_count;
    if (quantity == "F_upper" && inst.expected.max_forcing_upper)
      out << " <= " << *inst.expected.max_forcing_upper;
    out << "  per " << id << "\n";
  }
  if (emit_json) out << instance_json(inst).dump(2) << "\n";
}

int cmd_corpus(int max_vertices, int family_vertices, int random_count,
               std::uint64_t seed, const std::string& format,
               std::ostream& out) {
  std::vector<CorpusEntry> corpus =
      full_corpus(max_vertices, family_vertices, random_count, seed);
  int violations = 0;
  long long checks = 0;
  if (format != "json") out << "id\tstatement_id\tlhs\trhs\tholds\ttight\n";
  nlohmann::json arr = nlohmann::json::array();
  // invariant sweeps run on the graphs small enough for all-pairs work
  long long switch_pairs = 0, switch_failures = 0;
  long long distance_triples = 0, distance_failures = 0;
  for (const CorpusEntry& entry : corpus) {
    if (!has_perfect_matching(entry.graph)) continue;
    for (const BoundReport& r : verify_all(entry.graph)) {
      if (!r.applicable) continue;
      ++checks;
      bool proven = r.statement_id != "Prob5.5";
      if (proven && !r.holds) ++violations;
      if (format == "json") {
        nlohmann::json j = report_json(r);
        j["id"] = entry.id;
        arr.push_back(std::move(j));
      } else if (!r.holds || format == "tsv") {
        out << entry.id << "\t" << r.statement_id << "\t" << r.lhs.str()
            << "\t" << r.rhs.str() << "\t" << (r.holds ? "true" : "false")
            << "\t" << (r.tight ? "true" : "false") << "\n";
      }
    }
    if (entry.graph.vertex_count() > 12) continue;
    const Graph& g = entry.graph;
    SpectrumReport spectrum = forcing_spectrum(g);
    std::map<std::vector<Edge>, int> forcing_of;
    for (const auto& [pm, f] : spectrum.per_matching) forcing_of[pm.edges] = f;
    for (const auto& [pm, f] : spectrum.per_matching)
      for (const AlternatingCycle& c : enumerate_alternating_cycles(g, pm)) {
        int after = forcing_of.at(apply_switch(pm, c).edges);
        ++distance_triples;
        distance_failures += std::abs(after - f) > c.half_length() - 1;
      }
    if (!g.is_bipartite()) continue;
    int k = g.vertex_count() / 2 - spectrum.f_max;
    for (const auto& [target, tf] : spectrum.per_matching)
      for (const auto& [start, sf] : spectrum.per_matching) {
        SwitchSequence s = switch_sequence_bounded(g, target, start, k);
        ++switch_pairs;
        switch_failures += !validate_switch_sequence(g, s, start, target);
      }
  }
  violations += static_cast<int>(switch_failures + distance_failures);
  if (format == "json") {
    out << arr.dump(2) << "\n";
  } else {
    out << "graphs\t" << corpus.size() << "\n";
    out << "checks\t" << checks << "\n";
    out << "switch_pairs\t" << switch_pairs << "\t(failures "
        << switch_failures << ")\n";
    out << "switch_distance_triples\t" << distance_triples << "\t(failures "
        << distance_failures << ")\n";
    out << "violations\t" << violations << "\n";
  }
  return violations == 0 ? 0 : 3;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"forcing numbers of perfect matchings: exhaustive engines, "
               "bounded switch construction, family generators and bound "
               "verifiers"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tsv", "json", "human"}));
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "random seed");
  // global flags may follow the subcommand
  app.fallthrough();

  auto* gen = app.add_subcommand("gen", "generate a named family instance");
  std::string gen_family;
  std::vector<std::string> gen_params;
  std::string gen_out = ".";
  bool gen_json = false;
  gen->add_option("family", gen_family)->required();
  gen->add_option("params", gen_params);
  gen->add_option("--out", gen_out, "output directory");
  gen->add_flag("--json", gen_json, "also print the instance document");

  auto* forcing_cmd =
      app.add_subcommand("forcing", "minimum forcing set of one matching");
  std::string fo_graph, fo_matching;
  forcing_cmd->add_option("graph", fo_graph)->required();
  forcing_cmd->add_option("matching", fo_matching)->required();

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "forcing spectrum of a graph");
  std::string sp_graph;
  std::vector<std::string> sp_family;
  spectrum_cmd->add_option("graph", sp_graph);
  spectrum_cmd->add_option("--family", sp_family,
                           "family name and parameters instead of a file");

  auto* switch_cmd = app.add_subcommand(
      "switch", "bounded switch sequence between two matchings");
  std::string sw_graph, sw_start, sw_target;
  std::vector<std::string> sw_family;
  int sw_k = 0;
  int sw_cap = 0;
  bool sw_oracle = false, sw_skip = false;
  switch_cmd->add_option("graph", sw_graph);
  switch_cmd->add_option("start", sw_start);
  switch_cmd->add_option("target", sw_target);
  std::string sw_from, sw_to;
  switch_cmd->add_option("--family", sw_family,
                         "family spec; pair with --from/--to matching names");
  switch_cmd->add_option("--from", sw_from, "named start matching");
  switch_cmd->add_option("--to", sw_to, "named target matching");
  switch_cmd->add_option("--k", sw_k, "bound parameter (default n - F(G))");
  switch_cmd->add_option("--cap", sw_cap, "oracle half-length cap");
  switch_cmd->add_flag("--oracle", sw_oracle, "breadth-first oracle instead");
  switch_cmd->add_flag("--skip-precheck", sw_skip,
                       "skip the forcing lower bound verification");

  auto* reach_cmd =
      app.add_subcommand("reach", "shortest capped switch sequence");
  std::string re_graph, re_m1, re_m2;
  std::vector<std::string> re_family;
  int re_cap = 2;
  reach_cmd->add_option("graph", re_graph);
  reach_cmd->add_option("start", re_m1);
  reach_cmd->add_option("target", re_m2);
  std::string re_from, re_to;
  reach_cmd->add_option("--family", re_family,
                        "family spec; pair with --from/--to matching names");
  reach_cmd->add_option("--from", re_from, "named start matching");
  reach_cmd->add_option("--to", re_to, "named target matching");
  reach_cmd->add_option("--cap", re_cap, "half-length cap")->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "check every catalogued bound on a graph");
  std::string ve_graph;
  std::vector<std::string> ve_family;
  verify_cmd->add_option("graph", ve_graph);
  verify_cmd->add_option("--family", ve_family,
                         "family name and parameters instead of a file");

  auto* corpus_cmd = app.add_subcommand(
      "corpus", "verify every catalogued bound over the whole corpus");
  int co_max = 10, co_family = 16, co_random = 200;
  corpus_cmd->add_option("--max-vertices", co_max,
                         "exhaustive enumeration bound (<= 10)");
  corpus_cmd->add_option("--family-vertices", co_family, "family grid bound");
  corpus_cmd->add_option("--random", co_random, "random instance count");

  try {
    std::vector<const char*> argv{"forcing"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  if (gen->parsed()) {
    cmd_gen(gen_family, gen_params, seed, gen_out, gen_json, out);
    return 0;
  }
  if (forcing_cmd->parsed()) {
    Graph g = load_graph(fo_graph);
    ForcingCertificate cert = forcing_number(g, load_matching(g, fo_matching));
    if (format == "json") {
      out << certificate_json(cert).dump(2) << "\n";
    } else {
      out << "forcing number " << cert.size << "\n";
      out << "forcing set:";
      for (const Edge& e : cert.forcing_set)
        out << " " << e.a + 1 << "-" << e.b + 1;
      out << "\n";
    }
    return 0;
  }
  if (spectrum_cmd->parsed())
    return spectrum_exit(resolve_graph(sp_graph, sp_family, seed).graph,
                         format, out);
  if (switch_cmd->parsed()) {
    LoadedGraph lg = resolve_graph(sw_graph, sw_family, seed);
    const Graph& g = lg.graph;
    PerfectMatching start =
        resolve_matching(lg, sw_from.empty() ? sw_start : sw_from);
    PerfectMatching target =
        resolve_matching(lg, sw_to.empty() ? sw_target : sw_to);
    int k = sw_k;
    if (k == 0) k = g.vertex_count() / 2 - forcing_spectrum(g).f_max;
    int cap = sw_cap == 0 ? k + 1 : sw_cap;
    if (sw_oracle) {
      auto shortest = switch_reachable(g, start, target, cap);
      if (!shortest) {
        out << "UNREACHABLE under cap " << cap << "\n";
        return 0;
      }
      out << "shortest " << shortest->length() << " steps under cap " << cap
          << "\n";
      SwitchSequence constructed =
          switch_sequence_bounded(g, target, start, k, sw_skip);
      out << "constructed " << constructed.length() << " steps under cap "
          << k + 1 << "\n";
      if (format == "json")
        out << sequence_json(*shortest).dump(2) << "\n";
      else
        print_sequence_human(out, *shortest, lg.labels);
      return 0;
    }
    SwitchSequence seq = switch_sequence_bounded(g, target, start, k, sw_skip);
    if (format == "json")
      out << sequence_json(seq).dump(2) << "\n";
    else
      print_sequence_human(out, seq, lg.labels);
    return 0;
  }
  if (reach_cmd->parsed()) {
    LoadedGraph lg = resolve_graph(re_graph, re_family, seed);
    auto seq = switch_reachable(
        lg.graph, resolve_matching(lg, re_from.empty() ? re_m1 : re_from),
        resolve_matching(lg, re_to.empty() ? re_m2 : re_to), re_cap);
    if (!seq) {
      out << "UNREACHABLE under cap " << re_cap << "\n";
      return 0;
    }
    if (format == "json")
      out << sequence_json(*seq).dump(2) << "\n";
    else
      print_sequence_human(out, *seq, lg.labels);
    return 0;
  }
  if (verify_cmd->parsed()) {
    Graph g;
    if (!ve_family.empty()) {
      std::vector<std::string> params(ve_family.begin() + 1, ve_family.end());
      g = make_family(ve_family[0], params, seed).graph;
    } else if (!ve_graph.empty()) {
      g = load_graph(ve_graph);
    } else {
      throw InvalidParams("verify needs a graph file or --family");
    }
    return reports_exit(verify_all(g), format, out);
  }
  if (corpus_cmd->parsed())
    return cmd_corpus(co_max, co_family, co_random, seed, format, out);
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const NoPerfectMatching& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace forcing
