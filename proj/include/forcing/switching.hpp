#ifndef FORCING_SWITCHING_HPP
#define FORCING_SWITCHING_HPP

#include <optional>
#include <vector>

#include "forcing/matching.hpp"

namespace forcing {

// One switch: after = before ^ E(cycle), cycle alternating w.r.t. before.
struct SwitchStep {
  AlternatingCycle cycle;
  PerfectMatching before;
  PerfectMatching after;
};

// Chained switch steps; every cycle has half_length <= half_length_cap.
struct SwitchSequence {
  std::vector<SwitchStep> steps;
  int half_length_cap = 0;

  int length() const { return static_cast<int>(steps.size()); }
};

// Replays the sequence: consecutive steps chain, each cycle alternates and
// stays within the cap, and the last step ends at `target`.
bool validate_switch_sequence(const Graph& g, const SwitchSequence& seq,
                              const PerfectMatching& start,
                              const PerfectMatching& target);

// Switches m along c. Throws NotAlternating unless c alternates w.r.t. m.
// Involutive: applying the same cycle twice restores m.
PerfectMatching apply_switch(const PerfectMatching& m, const AlternatingCycle& c);

// The vertex-disjoint even cycles forming m1 ^ m2, canonically ordered.
// Empty iff m1 == m2; each cycle alternates w.r.t. both matchings.
std::vector<AlternatingCycle> symmetric_difference_cycles(
    const PerfectMatching& m1, const PerfectMatching& m2);

// Transforms m_start into m_target by switches along cycles of half-length
// at most k+1, following the constructive argument:
//   - shared edges are peeled off two vertices at a time;
//   - any short cycle (half-length <= k+1) of the difference is switched
//     directly;
//   - a long difference cycle is shortened through its minimum-offset chord,
//     or, when every chord is long, through a composite cycle assembled from
//     greedily chosen disjoint interval cycles and the connecting paths.
// Requires g bipartite and a perfect matching attaining the forcing lower
// bound n-k. When m_target itself fails the bound (verified via
// check_forcing_lower_bound unless skip_precheck), the transformation pivots
// through the first enumerated matching that attains it; PreconditionFailed
// is thrown when no matching does.
SwitchSequence switch_sequence_bounded(const Graph& g,
                                       const PerfectMatching& m_target,
                                       const PerfectMatching& m_start, int k,
                                       bool skip_precheck = false);

// Replaces the single switch along c by an equivalent chain of 4-cycle
// switches, splitting recursively at a chord. Throws NoChord when an
// intermediate cycle of half-length >= 3 is chordless.
SwitchSequence refine_to_2switches(const Graph& g, const PerfectMatching& m,
                                   const AlternatingCycle& c);

// Breadth-first oracle over the matching transformation graph whose edges
// are switches of half-length <= half_length_cap. Returns a shortest
// sequence from m1 to m2 (lexicographically smallest among those of equal
// length, stepping through canonically ordered cycles), or nullopt when
// unreachable. Materializes every perfect matching.
std::optional<SwitchSequence> switch_reachable(const Graph& g,
                                               const PerfectMatching& m1,
                                               const PerfectMatching& m2,
                                               int half_length_cap);

}  // namespace forcing

#endif  // FORCING_SWITCHING_HPP
