#ifndef FORCING_IO_HPP
#define FORCING_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "forcing/bounds.hpp"
#include "forcing/families.hpp"
#include "forcing/matching.hpp"
#include "forcing/switching.hpp"

namespace forcing {

// Edge-list text format, 1-based, LF-terminated:
//   c <comment>                 anywhere
//   p <n_vertices> <n_edges>    first non-comment line
//   b <v1> <v2> ...             optional, lists one side of a bipartition
//   e <u> <v>                   one line per edge
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_string(const std::string& text);

// Matching format: one line `m <u> <v>` per edge, 1-based. Reading
// validates against the accompanying graph.
std::string write_matching(const PerfectMatching& m);
PerfectMatching read_matching(const Graph& g, std::istream& in);
PerfectMatching read_matching_string(const Graph& g, const std::string& text);

// JSON documents. Vertices are 1-based in every serialized form.
nlohmann::json certificate_json(const ForcingCertificate& cert);
nlohmann::json spectrum_json(const SpectrumReport& report);
nlohmann::json sequence_json(const SwitchSequence& seq);
nlohmann::json instance_json(const FamilyInstance& inst);
nlohmann::json report_json(const BoundReport& report);

// One TSV row per report: statement_id, lhs, rhs, holds, tight.
// Inapplicable reports are omitted.
std::string reports_tsv(const std::vector<BoundReport>& reports,
                        bool with_header = true);

}  // namespace forcing

#endif  // FORCING_IO_HPP
