#ifndef FORCING_BOUNDS_HPP
#define FORCING_BOUNDS_HPP

#include <string>
#include <vector>

#include "forcing/matching.hpp"
#include "forcing/rational.hpp"

namespace forcing {

// Statement ids used across reports. Plain-language catalog:
//   Cor2.2        bipartite: F(G) = n-1  iff  G is K_{n,n}
//   Thm3.1        e(G) * (n - F(G)) >= n^2
//   Cor3.3        r-regular: F(G) <= (r-1)/(2r) * |V(G)|
//   Cor3.4        F(Q_d) <= (1 - 1/d) * 2^(d-1)
//   Rem3.3        sharpness of Thm3.1 on disjoint unions of K_{n/k,n/k}
//   Prop4.3(i)    F(G_{n,k}) = n-k
//   Prop4.3(ii)   the named pair of G_{n,k} needs a (k+1)-switch
//   Prop4.7       chain family: F = n-k, pair unreachable under cap k+1
//   Lem4.8        a switch along a 2l-cycle moves f by at most l-1
//   Cor4.9        bipartite, F = n-k: consecutive spectrum values differ <= k
//   Thm5.1        bipartite, F = n-2: f >= ceil(n/2)-1
//   Lem5.2        f >= n-k where 2k = largest unique-matching induced order
//   Cor5.3        bipartite, F = n-2: f >= n-1-delta
//   Lem5.4        bipartite: f >= delta-1
//   Rem5.H        ring family: F = n-k and f = ceil(n/k)-1
//   Sec5.Gl       two-block family: F = n-2
//   Lem5.Gl       two-block family: f = ceil(n/2)+l-1
//   Cor5.interval attainable f for bipartite F = n-2 is [ceil(n/2)-1, n-2]
//   Prob5.5       open probe: does f >= ceil(n/k)-1 always hold?
//   Sec1.fKnn     f(K_{n,n}) = n-1 (cited)

struct GraphSummary {
  int pair_count = 0;  // n, half the order
  int vertex_count = 0;
  int edge_count = 0;
  int min_deg = 0;
  int max_forcing = 0;  // F(G)
  int min_forcing = 0;  // f(G)
};

// One checked statement on one graph. Verdicts use exact rationals only.
struct BoundReport {
  std::string statement_id;
  GraphSummary summary;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool tight = false;       // lhs == rhs
  bool applicable = true;   // false: hypothesis not met, nothing asserted
  std::string detail;
};

// Thm3.1: e(G) >= n^2 / (n - F(G)). lhs = e(G), rhs = n^2/k exactly.
BoundReport verify_edge_bound(const Graph& g);

// Cor3.3 on regular graphs: F(G) <= (r-1)/(2r) * |V(G)|.
BoundReport verify_regular_bound(const Graph& g);

// (1 - 1/d) * 2^(d-1), exactly.
Rational hypercube_upper_bound(int d);

// Cor2.2 both ways: exhaustive F(G) = n-1 iff structural K_{n,n}
// (balanced bipartition, every cross pair adjacent).
BoundReport verify_bipartite_maxforcing_characterization(const Graph& g);

// Cor4.9: consecutive spectrum values differ by at most k = n - F(G).
// detail reports "continuous" when the spectrum is an integer interval.
BoundReport verify_spectrum_gaps(const Graph& g);

// Thm5.1, Lem5.2, Cor5.3, Lem5.4 in that order. Statements requiring
// F(G) = n-2 come back applicable=false when the hypothesis fails;
// applicability is decided from the exhaustively computed F only.
std::vector<BoundReport> verify_minforcing_lower_bounds(const Graph& g);

// Prob5.5 probe: evaluates f(G) >= ceil(n/k)-1 with k = n - F(G) and
// records the verdict flagged CONJECTURE-PROBE. Never a correctness
// assertion; a violation would be a counterexample worth reporting.
BoundReport probe_problem55(const Graph& g);

// Every applicable report for g, computed from one spectrum pass:
// Thm3.1, Cor2.2/Cor4.9/minforcing statements (bipartite), Cor3.3
// (regular), Prob5.5 probe (bipartite).
std::vector<BoundReport> verify_all(const Graph& g);

}  // namespace forcing

#endif  // FORCING_BOUNDS_HPP
