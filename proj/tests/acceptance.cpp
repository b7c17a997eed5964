// Acceptance suite: runs every criterion over the exhaustive census of
// orders <= 8 plus the named fixtures and prints one pass/fail line per
// criterion.  All comparisons are exact (integers and rationals); there are
// no tolerances anywhere.

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncg/commuting.hpp"
#include "ncg/families.hpp"
#include "ncg/graph.hpp"
#include "ncg/isoclinism.hpp"
#include "ncg/ring.hpp"
#include "oracles.hpp"

using namespace ncg;

namespace {

struct Suite {
  int failed = 0;
  void criterion(int number, const std::string& label,
                 const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failed;
  }
};

std::vector<FiniteRing> census_up_to_8() {
  std::vector<FiniteRing> rings;
  for (int order = 2; order <= 8; ++order)
    for (const AbelianShape& shape : abelian_shapes_of_order(order)) {
      CensusOptions opts{shape};
      for (FiniteRing& r : enumerate_rings(opts)) rings.push_back(std::move(r));
    }
  return rings;
}

std::vector<FiniteRing> dedupe_noncommutative_census_up_to_8() {
  std::vector<FiniteRing> rings;
  for (int order = 2; order <= 8; ++order)
    for (const AbelianShape& shape : abelian_shapes_of_order(order)) {
      CensusOptions opts{shape};
      opts.require_noncommutative = true;
      opts.dedupe_isomorphism = true;
      for (FiniteRing& r : enumerate_rings(opts)) rings.push_back(std::move(r));
    }
  return rings;
}

std::vector<FiniteRing> fixtures() {
  std::vector<FiniteRing> out;
  out.push_back(row_ring(2));
  out.push_back(upper_triangular_ring(2, 2));
  out.push_back(matrix_ring(2, 2));
  out.push_back(matrix_ring(2, 3));  // order 81, within the 256 cap
  return out;
}

}  // namespace

int main() {
  Suite suite;

  std::vector<FiniteRing> census = census_up_to_8();
  std::vector<FiniteRing> fix = fixtures();
  std::vector<const FiniteRing*> census_noncomm;
  for (const FiniteRing& r : census)
    if (!r.is_commutative()) census_noncomm.push_back(&r);

  // 1. Edge identity, exact, on the non-commutative census and all fixtures.
  suite.criterion(1, "edge identity 2|E| = |R|^2 - sum|C_R(r)|", [&](std::string& d) {
    long long checked = 0;
    for (const FiniteRing* r : census_noncomm) {
      NonCommutingGraph g = NonCommutingGraph::build(*r);
      verify_edge_identity(*r, g);  // throws on mismatch
      ++checked;
    }
    for (const FiniteRing& r : fix) {
      NonCommutingGraph g = NonCommutingGraph::build(r);
      verify_edge_identity(r, g);
      ++checked;
    }
    d = std::to_string(checked) + " rings, zero tolerance";
    return true;
  });

  // 2. Fixture golden values, re-derived by the independent pair-scan oracle.
  suite.criterion(2, "fixture golden values (row_ring(2), UT2(Z2), M2(Z2))",
                  [&](std::string& d) {
    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
      if (!cond) {
        ok = false;
        d += std::string(d.empty() ? "" : "; ") + "failed: " + what;
      }
    };

    FiniteRing row = row_ring(2);
    expect(oracles::commuting_pairs(row) == 10, "oracle pairs(row) == 10");
    expect(oracles::center(row) == std::vector<int>{0}, "oracle Z(row) = {0}");
    expect(oracles::graph_edges(row) == 3, "oracle |E|(row) == 3");
    expect(row.center_size() == 1, "|Z(row)| == 1");
    expect(commuting_probability(row).pr == Rational(5, 8), "Pr(row) == 5/8");
    NonCommutingGraph grow = NonCommutingGraph::build(row);
    expect(grow.edge_count() == 3, "|E|(row) == 3");
    NonCommutingGraph k3 = NonCommutingGraph::from_edges(
        3, {{0, 1}, {0, 2}, {1, 2}}, "K3");
    expect(graph_isomorphic(grow, k3).has_value(), "graph(row) iso K3");

    FiniteRing ut = upper_triangular_ring(2, 2);
    expect(oracles::commuting_pairs(ut) == 40, "oracle pairs(UT2) == 40");
    expect(ut.center_size() == 2, "|Z(UT2)| == 2");
    expect(commuting_probability(ut).pr == Rational(5, 8), "Pr(UT2) == 5/8");
    NonCommutingGraph gut = NonCommutingGraph::build(ut);
    expect(gut.edge_count() == 12, "|E|(UT2) == 12");
    for (int v = 0; v < gut.vertex_count(); ++v)
      expect(gut.degree(v) == 4, "deg(UT2) == 4");
    for (int v = 0; v < gut.vertex_count(); ++v)
      expect(oracles::graph_degree(ut, gut.vertex_ranks()[v]) == 4,
             "oracle deg(UT2) == 4");

    FiniteRing m2 = matrix_ring(2, 2);
    expect(oracles::commuting_pairs(m2) == 88, "oracle pairs(M2) == 88");
    expect(m2.center_size() == 2, "|Z(M2)| == 2");
    expect(commuting_probability(m2).pr == Rational(11, 32), "Pr(M2) == 11/32");
    NonCommutingGraph gm = NonCommutingGraph::build(m2);
    expect(gm.edge_count() == 84, "|E|(M2) == 84");
    for (int v = 0; v < gm.vertex_count(); ++v)
      expect(gm.degree(v) == 12, "deg(M2) == 12");
    if (ok) d = "all values match the pair-scan oracle exactly";
    return ok;
  });

  // 3. Structural theorems on every non-commutative ring; the unity
  //    hypothesis of the completeness theorem must be load-bearing.
  suite.criterion(3, "structural theorems (connected, no star/lollipop/K_{a,b}, "
                     "unity => not complete)", [&](std::string& d) {
    bool found_nonunital_complete = false;
    long long checked = 0;
    std::vector<const FiniteRing*> all = census_noncomm;
    for (const FiniteRing& r : fix)
      if (!r.is_commutative()) all.push_back(&r);
    for (const FiniteRing* r : all) {
      NonCommutingGraph g = NonCommutingGraph::build(*r);
      GraphClassification c = classify(g);
      if (!c.connected) { d = "disconnected: " + r->name(); return false; }
      if (c.min_degree < 2) { d = "degree-one vertex: " + r->name(); return false; }
      if (c.is_star) { d = "star: " + r->name(); return false; }
      if (c.is_lollipop) { d = "lollipop: " + r->name(); return false; }
      if (c.is_complete_bipartite) { d = "complete bipartite: " + r->name(); return false; }
      if (r->unity() && c.is_complete) { d = "complete unital: " + r->name(); return false; }
      if (!r->unity() && c.is_complete) found_nonunital_complete = true;
      ++checked;
    }
    if (!found_nonunital_complete) {
      d = "no non-unital complete case found";
      return false;
    }
    d = std::to_string(checked) +
        " rings; non-unital complete case present (row ring family)";
    return true;
  });

  // 4. Bound suite with boundary-equality detection.
  suite.criterion(4, "bounds B1-B6 exact, equality witnesses at row_ring(2) "
                     "and UT2(Z2)", [&](std::string& d) {
    std::vector<const FiniteRing*> all = census_noncomm;
    for (const FiniteRing& r : fix)
      if (!r.is_commutative()) all.push_back(&r);
    for (const FiniteRing* r : all) {
      NonCommutingGraph g = NonCommutingGraph::build(*r);
      BoundReport rep = bound_suite(*r, g);  // throws on violation
      if (!rep.all_hold) { d = "bound violated on " + r->name(); return false; }
    }
    // Equality witnesses.
    FiniteRing row = row_ring(2);
    NonCommutingGraph grow = NonCommutingGraph::build(row);
    BoundReport rrow = bound_suite(row, grow);
    if (rrow.checks[4].id != "B5" || rrow.checks[4].slack != Rational(0)) {
      d = "B5 equality missed at row_ring(2)";
      return false;
    }
    FiniteRing ut = upper_triangular_ring(2, 2);
    NonCommutingGraph gut = NonCommutingGraph::build(ut);
    BoundReport rut = bound_suite(ut, gut);
    if (rut.checks[2].id != "B3" || rut.checks[2].slack != Rational(0)) {
      d = "B3 equality missed at UT2(Z2)";
      return false;
    }
    d = std::to_string(all.size()) +
        " rings; slack 0 witnesses: row_ring(2):B5, UT2(Z2):B3";
    return true;
  });

  // 5. Trivial-center scan.
  suite.criterion(5, "no trivial-center ring attains Pr = 1 - 2/|R| + 4/|R|^2",
                  [&](std::string& d) {
    TrivialCenterScan scan = scan_trivial_center(census);  // throws on a match
    if (scan.exact_matches != 0) return false;
    d = std::to_string(scan.rings_checked) +
        " trivial-center rings scanned, zero matches; nearest gap " +
        (scan.nearest.empty() ? std::string("n/a") : scan.nearest[0].gap.str());
    return true;
  });

  // 6. Dominating sets from generating sets, with the brute-force minimum as
  //    the reference point.
  suite.criterion(6, "generator dominating sets on M2(Z2) and UT2(Z2)",
                  [&](std::string& d) {
    FiniteRing m2 = matrix_ring(2, 2);
    NonCommutingGraph gm = NonCommutingGraph::build(m2);
    const int e12 = m2.shape().generator_rank(1);  // E12 at basis index 0*2+1
    const int e21 = m2.shape().generator_rank(2);  // E21 at basis index 1*2+0
    DominatingSet dm = dominating_from_generators(m2, gm, ElementSet::of({e12, e21}));
    if (!is_dominating(gm, dm.member_ranks)) return false;
    DominatingSet dm_min = minimum_dominating(gm);
    if (dm_min.member_ranks.size() > dm.member_ranks.size()) {
      d = "minimum exceeds the generator-derived set on M2(Z2)";
      return false;
    }

    FiniteRing ut = upper_triangular_ring(2, 2);
    NonCommutingGraph gu = NonCommutingGraph::build(ut);
    const int f11 = ut.shape().generator_rank(0);
    const int f12 = ut.shape().generator_rank(1);
    DominatingSet du = dominating_from_generators(ut, gu, ElementSet::of({f11, f12}));
    if (!is_dominating(gu, du.member_ranks)) return false;
    DominatingSet du_min = minimum_dominating(gu);
    if (du_min.member_ranks.size() > du.member_ranks.size()) {
      d = "minimum exceeds the generator-derived set on UT2(Z2)";
      return false;
    }
    d = "M2: |D| = " + std::to_string(dm.member_ranks.size()) + ", |D_min| = " +
        std::to_string(dm_min.member_ranks.size()) + "; UT2: |D| = " +
        std::to_string(du.member_ranks.size()) + ", |D_min| = " +
        std::to_string(du_min.member_ranks.size());
    return true;
  });

  // 7. Isoclinism theorem: every raw census ring against its opposite, and
  //    the full pairwise scan over isomorphism-class representatives (ring
  //    isomorphism preserves the graph, Pr and the isoclinism class, so the
  //    representatives cover every census pair).
  suite.criterion(7, "Z-isoclinic equal-|Z| pairs have isomorphic graphs and "
                     "equal Pr", [&](std::string& d) {
    long long opposite_pairs = 0;
    for (const FiniteRing* r : census_noncomm) {
      FiniteRing op = opposite(*r);
      IsoclinismTheoremReport rep = verify_isoclinism_theorem(*r, op);
      if (!rep.isoclinic) {
        d = "ring not isoclinic to its opposite: " + r->name();
        return false;
      }
      if (!rep.graphs_isomorphic || !rep.pr_equal) {
        d = "opposite-pair conclusion failed on " + r->name();
        return false;
      }
      ++opposite_pairs;
    }
    std::vector<FiniteRing> classes = dedupe_noncommutative_census_up_to_8();
    long long isoclinic_pairs = 0;
    for (size_t i = 0; i < classes.size(); ++i)
      for (size_t j = i + 1; j < classes.size(); ++j) {
        if (classes[i].center_size() != classes[j].center_size()) continue;
        IsoclinismTheoremReport rep =
            verify_isoclinism_theorem(classes[i], classes[j]);  // throws on violation
        if (rep.isoclinic) ++isoclinic_pairs;
      }
    d = std::to_string(opposite_pairs) + " opposite pairs verified; " +
        std::to_string(classes.size()) + " classes, " +
        std::to_string(isoclinic_pairs) +
        " isoclinic class pairs, graphs isomorphic and Pr equal throughout";
    return true;
  });

  // 8. Oracle agreement at |R| <= 64.
  suite.criterion(8, "centralizer-sum = pair-scan and degree formula, |R| <= 64",
                  [&](std::string& d) {
    long long checked = 0;
    std::vector<const FiniteRing*> all;
    for (const FiniteRing& r : census) all.push_back(&r);
    for (const FiniteRing& r : fix) all.push_back(&r);
    for (const FiniteRing* r : all) {
      if (r->order() > 64) continue;
      if (commuting_pairs_centralizer_sum(*r) != commuting_pairs_pair_scan(*r)) {
        d = "pair counts disagree on " + r->name();
        return false;
      }
      if (commuting_pairs_pair_scan(*r) != oracles::commuting_pairs(*r)) {
        d = "library and oracle counts disagree on " + r->name();
        return false;
      }
      NonCommutingGraph g = NonCommutingGraph::build(*r);
      if (!degree_formula_check(*r, g)) {
        d = "degree formula failed on " + r->name();
        return false;
      }
      ++checked;
    }
    d = std::to_string(checked) + " rings";
    return true;
  });

  if (suite.failed == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", suite.failed);
  return suite.failed == 0 ? 0 : 1;
}
