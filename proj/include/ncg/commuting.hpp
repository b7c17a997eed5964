#pragma once

#include <span>
#include <string>
#include <vector>

#include "ncg/graph.hpp"
#include "ncg/rational.hpp"
#include "ncg/ring.hpp"

namespace ncg {

struct CommutingStats {
  int ring_order = 0;
  int center_order = 0;
  long long commuting_pairs = 0;  // ordered pairs with ab == ba
  Rational pr;                    // commuting_pairs / order^2, exact
  long long edge_count = 0;       // |E| of the non-commuting graph
  int smallest_prime = 0;         // smallest prime dividing the order
};

long long commuting_pairs_centralizer_sum(const FiniteRing& R);
long long commuting_pairs_pair_scan(const FiniteRing& R);
int smallest_prime_factor(int n);

// Stats via centralizer sums; edge_count is taken from the graph when one
// is supplied, otherwise from a fresh adjacency scan.
CommutingStats commuting_probability(const FiniteRing& R,
                                     const NonCommutingGraph* g = nullptr);

// 2|E| == |R|^2 - sum |C_R(r)|, exact integers.  Throws IdentityViolated on
// mismatch (the identity is proved, so a mismatch means a bug).
struct EdgeIdentityReport {
  long long twice_edges = 0;
  long long order_sq_minus_pairs = 0;
  bool holds = false;
};
EdgeIdentityReport verify_edge_identity(const FiniteRing& R,
                                        const NonCommutingGraph& g);

// Every bound is normalized to lhs <= rhs; slack = rhs - lhs, so a held
// bound has slack >= 0 and slack == 0 marks a boundary witness.
struct BoundCheck {
  std::string id;
  std::string description;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  Rational slack;
  bool external = false;  // cited from outside, checked as sanity only
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_hold = false;
};

// The six bound checks for a non-commutative ring:
//   B1  lower bound on Pr from the edge count
//   B2  |E| <= (|R|-|Z|)(|R|-p)/2, p smallest prime dividing |R|
//   B3  |E| >= 3|R|^2/16
//   B4  |E| >= |R|(|R|-|Z|)/4
//   B5  Pr <= 1/2 + |Z|/(2|R|)
//   B6  Pr <= 5/8 (external)
// Throws BoundViolated (with the serialized ring in the message) if any
// check fails; the report is still retrievable from the exception text.
BoundReport bound_suite(const FiniteRing& R, const NonCommutingGraph& g,
                        bool throw_on_violation = true);

struct TrivialCenterScan {
  struct NearMiss {
    std::string ring_name;
    Rational pr;
    Rational target;
    Rational gap;  // |pr - target|, > 0
  };
  long long rings_checked = 0;   // non-commutative with |Z| == 1
  long long exact_matches = 0;   // must stay 0
  std::vector<NearMiss> nearest; // smallest gaps seen, ascending
};

// No non-commutative ring with trivial center may satisfy
// Pr == 1 - 2/|R| + 4/|R|^2; an exact match throws CounterexampleFound.
TrivialCenterScan scan_trivial_center(std::span<const FiniteRing> census,
                                      size_t keep_near_misses = 3);

struct PrConsistencyReport {
  bool z_orders_match = false;
  bool graphs_isomorphic = false;
  bool applicable = false;  // both hypotheses hold
  Rational pr1;
  Rational pr2;
  bool pr_equal = false;
};

// Equal-|Z| rings with isomorphic non-commuting graphs must have equal Pr.
// Throws ConsistencyViolated when the hypotheses hold but Pr differs.
PrConsistencyReport pr_graph_consistency(const FiniteRing& r1,
                                         const FiniteRing& r2);

}  // namespace ncg
