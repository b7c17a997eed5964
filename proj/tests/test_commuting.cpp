#include <doctest.h>

#include "fixtures.hpp"
#include "ncg/commuting.hpp"
#include "ncg/families.hpp"
#include "oracles.hpp"

using namespace ncg;

TEST_CASE("smallest prime factor") {
  CHECK(smallest_prime_factor(4) == 2);
  CHECK(smallest_prime_factor(9) == 3);
  CHECK(smallest_prime_factor(49) == 7);
  CHECK(smallest_prime_factor(77) == 7);
  CHECK(smallest_prime_factor(2) == 2);
  CHECK_THROWS_AS(smallest_prime_factor(1), Error);
}

TEST_CASE("commuting probability: commutative rings have Pr = 1") {
  CommutingStats s = commuting_probability(zero_ring(AbelianShape{{2, 3}}));
  CHECK(s.pr == Rational(1));
  CHECK(s.edge_count == 0);
  CHECK(s.commuting_pairs == 36);
}

TEST_CASE("commuting probability: row ring attains 5/8") {
  FiniteRing R = row_ring(2);
  CHECK(oracles::commuting_pairs(R) == 10);  // oracle first
  CommutingStats s = commuting_probability(R);
  CHECK(s.commuting_pairs == 10);
  CHECK(s.pr == Rational(5, 8));
  CHECK(s.center_order == 1);
  CHECK(s.edge_count == 3);
  CHECK(s.smallest_prime == 2);
}

TEST_CASE("commuting probability: M2(Z2) has Pr = 11/32") {
  FiniteRing M = matrix_ring(2, 2);
  CHECK(oracles::commuting_pairs(M) == 88);  // 2*16 + 14*4
  CommutingStats s = commuting_probability(M);
  CHECK(s.commuting_pairs == 88);
  CHECK(s.pr == Rational(11, 32));
  CHECK(s.edge_count == 84);
}

TEST_CASE("commuting probability: UT2(Z2) has Pr = 5/8") {
  FiniteRing U = upper_triangular_ring(2, 2);
  CHECK(oracles::commuting_pairs(U) == 40);  // 2*8 + 6*4
  CommutingStats s = commuting_probability(U);
  CHECK(s.pr == Rational(5, 8));
  CHECK(s.edge_count == 12);
}

TEST_CASE("commuting pair counts agree along both routes") {
  for (const FiniteRing& R :
       {row_ring(2), row_ring(3), upper_triangular_ring(2, 2),
        matrix_ring(2, 2), zero_ring(AbelianShape{{8}}),
        direct_product(row_ring(2), modular_ring(2))}) {
    CHECK(commuting_pairs_centralizer_sum(R) == commuting_pairs_pair_scan(R));
    CHECK(commuting_pairs_pair_scan(R) == oracles::commuting_pairs(R));
  }
}

TEST_CASE("edge identity holds exactly on fixtures") {
  for (const FiniteRing& R :
       {row_ring(2), upper_triangular_ring(2, 2), matrix_ring(2, 2)}) {
    NonCommutingGraph g = NonCommutingGraph::build(R);
    EdgeIdentityReport rep = verify_edge_identity(R, g);
    CHECK(rep.holds);
    CHECK(rep.twice_edges == rep.order_sq_minus_pairs);
  }
  // row: 2*3 = 16 - 10; UT2: 2*12 = 64 - 40.
  NonCommutingGraph g = NonCommutingGraph::build(row_ring(2));
  EdgeIdentityReport rep = verify_edge_identity(row_ring(2), g);
  CHECK(rep.twice_edges == 6);
  CHECK(rep.order_sq_minus_pairs == 6);
}

TEST_CASE("edge identity on a commutative ring: zero edges") {
  FiniteRing Z = modular_ring(5);
  NonCommutingGraph g = NonCommutingGraph::build(Z);
  EdgeIdentityReport rep = verify_edge_identity(Z, g);
  CHECK(rep.holds);
  CHECK(rep.twice_edges == 0);
}

TEST_CASE("bound suite: M2(Z2) numbers") {
  FiniteRing M = matrix_ring(2, 2);
  NonCommutingGraph g = NonCommutingGraph::build(M);
  BoundReport rep = bound_suite(M, g);
  REQUIRE(rep.checks.size() == 6);
  CHECK(rep.all_hold);

  const BoundCheck& b1 = rep.checks[0];
  CHECK(b1.id == "B1");
  CHECK(b1.lhs == Rational(37, 128));  // = 74/256
  CHECK(b1.rhs == Rational(11, 32));
  CHECK(b1.holds);

  const BoundCheck& b2 = rep.checks[1];
  CHECK(b2.lhs == Rational(84));
  CHECK(b2.rhs == Rational(98));  // (16-2)(16-2)/2

  const BoundCheck& b3 = rep.checks[2];
  CHECK(b3.lhs == Rational(48));  // 3*256/16
  CHECK(b3.rhs == Rational(84));

  const BoundCheck& b4 = rep.checks[3];
  CHECK(b4.lhs == Rational(56));  // 16*14/4
  CHECK(b4.rhs == Rational(84));

  const BoundCheck& b5 = rep.checks[4];
  CHECK(b5.lhs == Rational(11, 32));
  CHECK(b5.rhs == Rational(9, 16));

  const BoundCheck& b6 = rep.checks[5];
  CHECK(b6.rhs == Rational(5, 8));
  CHECK(b6.external);
}

TEST_CASE("bound suite: boundary equalities are hit with zero slack") {
  // row_ring(2) attains B5 and B6: Pr = 5/8 = 1/2 + 1/8.
  FiniteRing R = row_ring(2);
  NonCommutingGraph gr = NonCommutingGraph::build(R);
  BoundReport rep = bound_suite(R, gr);
  CHECK(rep.all_hold);
  CHECK(rep.checks[4].id == "B5");
  CHECK(rep.checks[4].slack == Rational(0));
  CHECK(rep.checks[5].slack == Rational(0));

  // UT2(Z2) attains B3: |E| = 12 = 3*64/16.
  FiniteRing U = upper_triangular_ring(2, 2);
  NonCommutingGraph gu = NonCommutingGraph::build(U);
  BoundReport repu = bound_suite(U, gu);
  CHECK(repu.all_hold);
  CHECK(repu.checks[2].id == "B3");
  CHECK(repu.checks[2].slack == Rational(0));
}

TEST_CASE("bound suite rejects commutative rings") {
  FiniteRing Z = modular_ring(4);
  NonCommutingGraph g = NonCommutingGraph::build(Z);
  CHECK_THROWS_AS(bound_suite(Z, g), Error);
}

TEST_CASE("trivial center scan: row ring is consistent, census is clean") {
  // Target for |R| = 4 is 1 - 2/4 + 4/16 = 3/4, and Pr(row) = 5/8.
  std::vector<FiniteRing> census;
  census.push_back(row_ring(2));
  TrivialCenterScan scan = scan_trivial_center(census);
  CHECK(scan.rings_checked == 1);
  CHECK(scan.exact_matches == 0);
  REQUIRE(scan.nearest.size() == 1);
  CHECK(scan.nearest[0].target == Rational(3, 4));
  CHECK(scan.nearest[0].pr == Rational(5, 8));
  CHECK(scan.nearest[0].gap == Rational(1, 8));

  // Exhaustive order-4 census.
  auto rings = enumerate_rings(
      CensusOptions{AbelianShape{{2, 2}}, /*require_noncommutative=*/true});
  TrivialCenterScan full = scan_trivial_center(rings);
  CHECK(full.exact_matches == 0);
  CHECK(full.rings_checked > 0);
}

TEST_CASE("pr/graph consistency: opposite rings and unrelated rings") {
  FiniteRing R = row_ring(2);
  FiniteRing op = opposite(R);
  PrConsistencyReport rep = pr_graph_consistency(R, op);
  CHECK(rep.z_orders_match);
  CHECK(rep.graphs_isomorphic);
  CHECK(rep.applicable);
  CHECK(rep.pr1 == Rational(5, 8));
  CHECK(rep.pr2 == Rational(5, 8));
  CHECK(rep.pr_equal);

  PrConsistencyReport self = pr_graph_consistency(R, R);
  CHECK(self.applicable);
  CHECK(self.pr_equal);

  // |Z| mismatch: hypotheses not met, nothing asserted.
  PrConsistencyReport skip = pr_graph_consistency(R, upper_triangular_ring(2, 2));
  CHECK_FALSE(skip.z_orders_match);
  CHECK_FALSE(skip.applicable);
}

TEST_CASE("pr is in (0,1] and below 1 exactly when edges exist") {
  for (const FiniteRing& R :
       {row_ring(2), matrix_ring(2, 2), modular_ring(6),
        zero_ring(AbelianShape{{4}})}) {
    CommutingStats s = commuting_probability(R);
    CHECK(s.pr > Rational(0));
    CHECK(s.pr <= Rational(1));
    CHECK((s.pr < Rational(1)) == (s.edge_count > 0));
    CHECK((s.pr == Rational(1)) == R.is_commutative());
  }
}
