#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ncg/families.hpp"
#include "ncg/graph.hpp"
#include "ncg/io.hpp"
#include "oracles.hpp"

using namespace ncg;

namespace {

NonCommutingGraph random_graph(std::mt19937& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  return NonCommutingGraph::from_edges(n, edges, "random");
}

bool naive_connected(const NonCommutingGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) parent[find(u)] = find(v);
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

bool naive_complete_bipartite(const NonCommutingGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return false;
  for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        const bool cross = ((mask >> u) & 1) != ((mask >> v) & 1);
        if (g.adjacent(u, v) != cross) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

long long naive_min_dominating_size(const NonCommutingGraph& g) {
  const int n = g.vertex_count();
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool dominates = true;
    for (int v = 0; v < n && dominates; ++v) {
      if ((mask >> v) & 1) continue;
      bool covered = false;
      for (int u = 0; u < n && !covered; ++u)
        if (((mask >> u) & 1) && g.adjacent(u, v)) covered = true;
      if (!covered) dominates = false;
    }
    if (dominates) best = std::min(best, std::popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("property: isomorphism is found under random relabeling") {
  std::mt19937 rng(20230811);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    NonCommutingGraph g = random_graph(rng, n, 0.5);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> relabeled;
    for (auto [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
    NonCommutingGraph h = NonCommutingGraph::from_edges(n, relabeled, "relabeled");

    auto map = graph_isomorphic(g, h);
    REQUIRE(map.has_value());
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(g.adjacent(u, v) == h.adjacent((*map)[u], (*map)[v]));
  }
}

TEST_CASE("property: classifier agrees with naive predicates") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    NonCommutingGraph g = random_graph(rng, n, 0.2 + 0.6 * (trial % 3) / 2.0);
    GraphClassification c = classify(g);

    CHECK(c.connected == naive_connected(g));
    CHECK(c.is_complete_bipartite == naive_complete_bipartite(g));

    bool naive_complete = true;
    for (int u = 0; u < n && naive_complete; ++u)
      for (int v = u + 1; v < n && naive_complete; ++v)
        if (!g.adjacent(u, v)) naive_complete = false;
    CHECK(c.is_complete == naive_complete);

    bool naive_star = false;
    for (int h = 0; h < n && !naive_star; ++h) {
      bool ok = g.degree(h) == n - 1;
      for (int v = 0; v < n && ok; ++v)
        if (v != h && g.degree(v) != 1) ok = false;
      naive_star = ok;
    }
    CHECK(c.is_star == naive_star);

    long long degree_sum = 0;
    for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("property: minimum dominating set size matches a full mask scan") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    NonCommutingGraph g = random_graph(rng, n, 0.4);
    DominatingSet d = minimum_dominating(g);
    CHECK(static_cast<long long>(d.member_ranks.size()) ==
          naive_min_dominating_size(g));
    CHECK(is_dominating(g, d.member_ranks));
  }
}

TEST_CASE("property: census sample round-trips and keeps ring invariants") {
  CensusOptions opts{AbelianShape{{2, 2, 2}}};
  std::vector<FiniteRing> census = enumerate_rings(opts);
  REQUIRE(census.size() > 100);
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteRing& r = census[rng() % census.size()];

    FiniteRing back = parse_ring_spec(serialize_ring_spec(r));
    CHECK(back.structure_constants() == r.structure_constants());

    FiniteRing op = opposite(r);
    FiniteRing opop = opposite(op);
    CHECK(opop.full_table() == r.full_table());

    const int a = static_cast<int>(rng() % r.order());
    const int b = static_cast<int>(rng() % r.order());
    CHECK(r.commutator(a, b) == r.neg(r.commutator(b, a)));
    CHECK((r.commutator(a, b) == 0) == r.commutes(a, b));
    CHECK(centralizer(r, a).contains(a));
    for (int z : r.center_ranks()) CHECK(centralizer(r, a).contains(z));
  }
}

TEST_CASE("property: validator verdict matches the oracle on corrupted tables") {
  FiniteRing R = row_ring(2);
  const std::vector<int> good = R.full_table();
  std::mt19937 rng(31337);
  int rejected = 0;
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<int> table = good;
    const int spot = static_cast<int>(rng() % table.size());
    table[spot] = static_cast<int>(rng() % R.order());
    const bool oracle_ok = oracles::associative(R.order(), table) &&
                           oracles::distributive(R, table);
    bool accepted = true;
    try {
      FiniteRing::from_full_table(R.shape(), table);
    } catch (const Error&) {
      accepted = false;
    }
    CHECK(accepted == oracle_ok);
    if (!accepted) ++rejected;
  }
  CHECK(rejected > 0);  // corruption does get caught
}

TEST_CASE("property: degree formula across a random census slice") {
  CensusOptions opts{AbelianShape{{2, 4}}};
  std::vector<FiniteRing> census = enumerate_rings(opts);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteRing& r = census[rng() % census.size()];
    NonCommutingGraph g = NonCommutingGraph::build(r);
    CHECK(degree_formula_check(r, g));
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(g.degree(v) == oracles::graph_degree(r, g.vertex_ranks()[v]));
  }
}
