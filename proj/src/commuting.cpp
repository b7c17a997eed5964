#include "ncg/commuting.hpp"

#include <algorithm>

namespace ncg {

long long commuting_pairs_centralizer_sum(const FiniteRing& R) {
  long long total = 0;
  for (int r = 0; r < R.order(); ++r)
    total += static_cast<long long>(centralizer(R, r).size());
  return total;
}

long long commuting_pairs_pair_scan(const FiniteRing& R) {
  long long total = 0;
  for (int a = 0; a < R.order(); ++a)
    for (int b = 0; b < R.order(); ++b)
      if (R.commutes(a, b)) ++total;
  return total;
}

int smallest_prime_factor(int n) {
  if (n < 2) throw Error("no prime factor below 2");
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

CommutingStats commuting_probability(const FiniteRing& R,
                                     const NonCommutingGraph* g) {
  CommutingStats s;
  s.ring_order = R.order();
  s.center_order = R.center_size();
  s.commuting_pairs = commuting_pairs_centralizer_sum(R);
  s.pr = Rational(s.commuting_pairs,
                  static_cast<long long>(R.order()) * R.order());
  s.smallest_prime = smallest_prime_factor(R.order());
  if (g) {
    s.edge_count = g->edge_count();
  } else {
    NonCommutingGraph built = NonCommutingGraph::build(R);
    s.edge_count = built.edge_count();
  }
  return s;
}

EdgeIdentityReport verify_edge_identity(const FiniteRing& R,
                                        const NonCommutingGraph& g) {
  EdgeIdentityReport rep;
  rep.twice_edges = 2 * g.edge_count();
  rep.order_sq_minus_pairs =
      static_cast<long long>(R.order()) * R.order() -
      commuting_pairs_centralizer_sum(R);
  rep.holds = rep.twice_edges == rep.order_sq_minus_pairs;
  if (!rep.holds)
    throw IdentityViolated("edge identity failed on " + R.name() + ": 2|E| = " +
                           std::to_string(rep.twice_edges) +
                           " but |R|^2 - #commuting = " +
                           std::to_string(rep.order_sq_minus_pairs));
  return rep;
}

BoundReport bound_suite(const FiniteRing& R, const NonCommutingGraph& g,
                        bool throw_on_violation) {
  if (R.is_commutative())
    throw Error("bound suite requires a non-commutative ring");

  const Rational order(R.order());
  const Rational z(R.center_size());
  const Rational order_sq = order * order;
  const CommutingStats stats = commuting_probability(R, &g);
  const Rational pr = stats.pr;
  const Rational edges(stats.edge_count);
  const Rational p(stats.smallest_prime);
  const Rational half(1, 2);

  BoundReport rep;
  auto push = [&](std::string id, std::string desc, Rational lhs, Rational rhs,
                  bool external = false) {
    BoundCheck c;
    c.id = std::move(id);
    c.description = std::move(desc);
    c.lhs = lhs;
    c.rhs = rhs;
    c.holds = lhs <= rhs;
    c.slack = rhs - lhs;
    c.external = external;
    rep.checks.push_back(std::move(c));
  };

  // B1: Pr >= 2|Z|/|R| + 1/|R| - |Z|^2/|R|^2 - |Z|/|R|^2
  push("B1", "Pr lower bound",
       Rational(2) * z / order + Rational(1) / order - z * z / order_sq -
           z / order_sq,
       pr);
  // B2: |E| <= (|R|-|Z|)(|R|-p)/2
  push("B2", "edge upper bound via smallest prime", edges,
       half * (order - z) * (order - p));
  // B3: |E| >= 3|R|^2/16
  push("B3", "edge lower bound 3|R|^2/16", Rational(3) * order_sq / Rational(16),
       edges);
  // B4: |E| >= |R|(|R|-|Z|)/4
  push("B4", "edge lower bound |R|(|R|-|Z|)/4", order * (order - z) / Rational(4),
       edges);
  // B5: Pr <= 1/2 + |Z|/(2|R|)
  push("B5", "Pr upper bound", pr, half + z / (Rational(2) * order));
  // B6: Pr <= 5/8 for any non-commutative ring (external result)
  push("B6", "Pr <= 5/8 (external)", pr, Rational(5, 8), true);

  rep.all_hold = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const BoundCheck& c) { return c.holds; });
  if (!rep.all_hold && throw_on_violation) {
    for (const auto& c : rep.checks)
      if (!c.holds)
        throw BoundViolated(c.id, "bound " + c.id + " (" + c.description +
                                      ") violated on " + R.name() + ": lhs " +
                                      c.lhs.str() + " > rhs " + c.rhs.str());
  }
  return rep;
}

TrivialCenterScan scan_trivial_center(std::span<const FiniteRing> census,
                                      size_t keep_near_misses) {
  TrivialCenterScan scan;
  for (const FiniteRing& R : census) {
    if (R.is_commutative() || R.center_size() != 1) continue;
    ++scan.rings_checked;
    const Rational order(R.order());
    const Rational target = Rational(1) - Rational(2) / order +
                            Rational(4) / (order * order);
    const Rational pr = Rational(commuting_pairs_centralizer_sum(R),
                                 static_cast<long long>(R.order()) * R.order());
    if (pr == target) {
      ++scan.exact_matches;
      throw CounterexampleFound(
          "non-commutative ring with trivial center and Pr = 1 - 2/|R| + 4/|R|^2: " +
          R.name() + " (Pr = " + pr.str() + ")");
    }
    TrivialCenterScan::NearMiss miss{R.name(), pr, target, (pr - target).abs()};
    auto pos = std::lower_bound(
        scan.nearest.begin(), scan.nearest.end(), miss,
        [](const auto& a, const auto& b) { return a.gap < b.gap; });
    scan.nearest.insert(pos, std::move(miss));
    if (scan.nearest.size() > keep_near_misses) scan.nearest.pop_back();
  }
  return scan;
}

PrConsistencyReport pr_graph_consistency(const FiniteRing& r1,
                                         const FiniteRing& r2) {
  if (r1.is_commutative() || r2.is_commutative())
    throw Error("Pr/graph consistency check requires non-commutative rings");
  PrConsistencyReport rep;
  rep.z_orders_match = r1.center_size() == r2.center_size();
  rep.pr1 = commuting_probability(r1).pr;
  rep.pr2 = commuting_probability(r2).pr;
  rep.pr_equal = rep.pr1 == rep.pr2;
  if (!rep.z_orders_match) return rep;

  NonCommutingGraph g1 = NonCommutingGraph::build(r1);
  NonCommutingGraph g2 = NonCommutingGraph::build(r2);
  rep.graphs_isomorphic = graph_isomorphic(g1, g2).has_value();
  rep.applicable = rep.z_orders_match && rep.graphs_isomorphic;
  if (rep.applicable && !rep.pr_equal)
    throw ConsistencyViolated("equal centers and isomorphic graphs but Pr(" +
                              r1.name() + ") = " + rep.pr1.str() + " != Pr(" +
                              r2.name() + ") = " + rep.pr2.str());
  return rep;
}

}  // namespace ncg
