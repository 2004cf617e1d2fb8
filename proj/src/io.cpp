#include "forcing/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

namespace forcing {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0] == "c") continue;
    out.push_back(std::move(tokens));
  }
  return out;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError("");
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected an integer for ") + what +
                     ", got '" + tok + "'");
  }
}

}  // namespace

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  if (g.is_bipartite()) {
    out << "b";
    for (Vertex v : g.bipartition()->side_a.to_vector()) out << " " << v + 1;
    out << "\n";
  }
  for (const Edge& e : g.edges())
    out << "e " << e.a + 1 << " " << e.b + 1 << "\n";
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  auto lines = tokenize_lines(in);
  if (lines.empty() || lines[0][0] != "p")
    throw ParseError("missing problem line 'p <n_vertices> <n_edges>'");
  if (lines[0].size() != 3) throw ParseError("malformed problem line");
  int n = parse_int(lines[0][1], "vertex count");
  int m = parse_int(lines[0][2], "edge count");

  std::vector<std::pair<int, int>> edges;
  std::vector<int> side_a;
  bool saw_b = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tokens = lines[i];
    if (tokens[0] == "e") {
      if (tokens.size() != 3) throw ParseError("malformed edge line");
      edges.emplace_back(parse_int(tokens[1], "edge endpoint") - 1,
                         parse_int(tokens[2], "edge endpoint") - 1);
    } else if (tokens[0] == "b") {
      if (saw_b) throw ParseError("duplicate bipartition line");
      saw_b = true;
      for (std::size_t t = 1; t < tokens.size(); ++t)
        side_a.push_back(parse_int(tokens[t], "bipartition vertex") - 1);
    } else {
      throw ParseError("unknown line tag '" + tokens[0] + "'");
    }
  }
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("edge count mismatch: header says " + std::to_string(m) +
                     ", found " + std::to_string(edges.size()));
  Graph g = build_graph(n, edges);
  if (saw_b) {
    VertexSet a;
    for (int v : side_a) {
      if (v < 0 || v >= n) throw ParseError("bipartition vertex out of range");
      a.add(v);
    }
    for (const Edge& e : g.edges())
      if (a.contains(e.a) == a.contains(e.b))
        throw ParseError("bipartition line does not 2-color the edges");
  }
  return g;
}

Graph read_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string write_matching(const PerfectMatching& m) {
  std::ostringstream out;
  for (const Edge& e : m.edges)
    out << "m " << e.a + 1 << " " << e.b + 1 << "\n";
  return out.str();
}

PerfectMatching read_matching(const Graph& g, std::istream& in) {
  std::vector<Edge> edges;
  for (const auto& tokens : tokenize_lines(in)) {
    if (tokens[0] != "m" || tokens.size() != 3)
      throw ParseError("matching lines must read 'm <u> <v>'");
    edges.push_back(make_edge(parse_int(tokens[1], "matching endpoint") - 1,
                              parse_int(tokens[2], "matching endpoint") - 1));
  }
  return matching_from_edges(g, edges);
}

PerfectMatching read_matching_string(const Graph& g, const std::string& text) {
  std::istringstream in(text);
  return read_matching(g, in);
}

namespace {

nlohmann::json edges_json(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : edges) out.push_back({e.a + 1, e.b + 1});
  return out;
}

nlohmann::json cycle_json(const AlternatingCycle& c) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : c.vertices) out.push_back(v + 1);
  return out;
}

}  // namespace

nlohmann::json certificate_json(const ForcingCertificate& cert) {
  return {{"matching", edges_json(cert.matching.edges)},
          {"forcing_set", edges_json(cert.forcing_set)},
          {"size", cert.size}};
}

nlohmann::json spectrum_json(const SpectrumReport& report) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& [pm, f] : report.per_matching)
    per.push_back({{"matching", edges_json(pm.edges)}, {"forcing_number", f}});
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& [a, b] : report.gaps) gaps.push_back({a, b});
  return {{"per_matching", per},
          {"spectrum", report.spectrum},
          {"f_min", report.f_min},
          {"f_max", report.f_max},
          {"gaps", gaps}};
}

nlohmann::json sequence_json(const SwitchSequence& seq) {
  nlohmann::json steps = nlohmann::json::array();
  for (const SwitchStep& step : seq.steps)
    steps.push_back({{"cycle", cycle_json(step.cycle)},
                     {"before", edges_json(step.before.edges)},
                     {"after", edges_json(step.after.edges)}});
  return {{"cap", seq.half_length_cap}, {"steps", steps}};
}

nlohmann::json instance_json(const FamilyInstance& inst) {
  nlohmann::json matchings = nlohmann::json::object();
  for (const auto& [name, pm] : inst.named_matchings)
    matchings[name] = edges_json(pm.edges);
  nlohmann::json expected = nlohmann::json::object();
  if (inst.expected.max_forcing) expected["F"] = *inst.expected.max_forcing;
  if (inst.expected.min_forcing) expected["f"] = *inst.expected.min_forcing;
  if (inst.expected.edge_count) expected["edges"] = *inst.expected.edge_count;
  if (inst.expected.max_forcing_upper)
    expected["F_upper"] = *inst.expected.max_forcing_upper;
  nlohmann::json statements = nlohmann::json::object();
  for (const auto& [quantity, id] : inst.expected.statements)
    statements[quantity] = id;
  return {{"name", inst.name},
          {"n_vertices", inst.graph.vertex_count()},
          {"edges", edges_json(inst.graph.edges())},
          {"labels", inst.vertex_labels},
          {"matchings", matchings},
          {"expected", expected},
          {"statements", statements},
          {"degenerate", inst.degenerate}};
}

nlohmann::json report_json(const BoundReport& report) {
  return {{"statement_id", report.statement_id},
          {"n", report.summary.pair_count},
          {"vertices", report.summary.vertex_count},
          {"edges", report.summary.edge_count},
          {"min_degree", report.summary.min_deg},
          {"F", report.summary.max_forcing},
          {"f", report.summary.min_forcing},
          {"lhs", report.lhs.str()},
          {"rhs", report.rhs.str()},
          {"holds", report.holds},
          {"tight", report.tight},
          {"applicable", report.applicable},
          {"detail", report.detail}};
}

std::string reports_tsv(const std::vector<BoundReport>& reports,
                        bool with_header) {
  std::ostringstream out;
  if (with_header) out << "statement_id\tlhs\trhs\tholds\ttight\n";
  for (const BoundReport& r : reports) {
    if (!r.applicable) continue;
    out << r.statement_id << "\t" << r.lhs.str() << "\t" << r.rhs.str() << "\t"
        << (r.holds ? "true" : "false") << "\t" << (r.tight ? "true" : "false")
        << "\n";
  }
  return out.str();
}

}  // namespace forcing
