#ifndef FORCING_CORPUS_HPP
#define FORCING_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "forcing/families.hpp"
#include "forcing/graph.hpp"

namespace forcing {

// Every connected bipartite graph with a perfect matching on at most
// max_vertices vertices (max_vertices <= 10), one representative per
// isomorphism class. Such graphs have balanced sides, so each class is a
// square biadjacency matrix; candidates are generated as sorted column
// multisets and kept only when minimal over all row permutations, column
// sorts, and transposition. Deterministic order.
std::vector<Graph> enumerate_connected_bipartite_pm_graphs(int max_vertices);

// The fixed family grid used by corpus runs: every generator instantiated
// over its full parameter range subject to the vertex bound.
std::vector<FamilyInstance> family_corpus(int max_vertices);

// `count` seeded random balanced bipartite instances with planted
// matchings; sizes cycle over 2..6 pairs and densities over 1/9..8/9.
std::vector<FamilyInstance> random_corpus(int count, std::uint64_t seed_base);

struct CorpusEntry {
  std::string id;
  Graph graph;
};

// Enumerated graphs (<= max_enum_vertices), the family grid
// (<= max_family_vertices) and `random_count` random instances, each with a
// stable id.
std::vector<CorpusEntry> full_corpus(int max_enum_vertices,
                                     int max_family_vertices, int random_count,
                                     std::uint64_t seed_base);

}  // namespace forcing

#endif  // FORCING_CORPUS_HPP
