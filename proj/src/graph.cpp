#include "ncg/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

namespace ncg {

// --- construction ---

void NonCommutingGraph::allocate(int n) {
  n_ = n;
  words_ = (n + 63) / 64;
  adj_.assign(static_cast<size_t>(n) * words_, 0);
}

void NonCommutingGraph::set_edge(int u, int v) {
  adj_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
  adj_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
}

NonCommutingGraph NonCommutingGraph::build(const FiniteRing& R) {
  NonCommutingGraph g;
  g.ring_name_ = R.name();
  for (int r = 0; r < R.order(); ++r)
    if (!R.is_central(r)) g.vertex_ranks_.push_back(r);
  g.allocate(static_cast<int>(g.vertex_ranks_.size()));
  for (int u = 0; u < g.n_; ++u)
    for (int v = u + 1; v < g.n_; ++v)
      if (!R.commutes(g.vertex_ranks_[u], g.vertex_ranks_[v])) g.set_edge(u, v);
  return g;
}

NonCommutingGraph NonCommutingGraph::from_edges(
    int n, const std::vector<std::pair<int, int>>& edges, std::string label) {
  NonCommutingGraph g;
  g.ring_name_ = std::move(label);
  g.vertex_ranks_.resize(n);
  for (int i = 0; i < n; ++i) g.vertex_ranks_[i] = i;
  g.allocate(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw MalformedTable("bad edge");
    g.set_edge(u, v);
  }
  return g;
}

int NonCommutingGraph::vertex_index_of_rank(int rank) const {
  auto it = std::lower_bound(vertex_ranks_.begin(), vertex_ranks_.end(), rank);
  if (it == vertex_ranks_.end() || *it != rank) return -1;
  return static_cast<int>(it - vertex_ranks_.begin());
}

int NonCommutingGraph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += std::popcount(adj_[static_cast<size_t>(v) * words_ + w]);
  return d;
}

long long NonCommutingGraph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> NonCommutingGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

NonCommutingGraph NonCommutingGraph::complement() const {
  NonCommutingGraph g;
  g.ring_name_ = ring_name_ + "~";
  g.vertex_ranks_ = vertex_ranks_;
  g.allocate(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) g.set_edge(u, v);
  return g;
}

std::vector<int> NonCommutingGraph::component_of(
    int start, std::optional<std::pair<int, int>> removed_edge) const {
  std::vector<char> seen(n_, 0);
  std::vector<int> out;
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    out.push_back(u);
    for (int v = 0; v < n_; ++v) {
      if (seen[v] || !adjacent(u, v)) continue;
      if (removed_edge &&
          ((u == removed_edge->first && v == removed_edge->second) ||
           (u == removed_edge->second && v == removed_edge->first)))
        continue;
      seen[v] = 1;
      q.push(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- classification ---

namespace {

// Eccentricity scan; returns -1 on an unreachable vertex.
int eccentricity(const NonCommutingGraph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  q.push(src);
  dist[src] = 0;
  int ecc = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v) && dist[v] == -1) {
        dist[v] = dist[u] + 1;
        ecc = std::max(ecc, dist[v]);
        q.push(v);
      }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == -1) return -1;
  return ecc;
}

bool is_clique(const NonCommutingGraph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

// A path graph: single vertex, or connected with two degree-1 endpoints and
// all inner degrees 2 (within the induced subgraph).
bool is_path(const NonCommutingGraph& g, const std::vector<int>& vs,
             std::optional<std::pair<int, int>> removed_edge) {
  if (vs.size() == 1) return true;
  std::map<int, int> deg;
  int ones = 0, twos = 0;
  for (int u : vs) {
    int d = 0;
    for (int v : vs) {
      if (u == v || !g.adjacent(u, v)) continue;
      if (removed_edge &&
          ((u == removed_edge->first && v == removed_edge->second) ||
           (u == removed_edge->second && v == removed_edge->first)))
        continue;
      ++d;
    }
    if (d == 1) ++ones;
    else if (d == 2) ++twos;
    else return false;
  }
  // Connectivity is guaranteed by the caller (vs is a component).
  return ones == 2 && twos == static_cast<int>(vs.size()) - 2;
}

}  // namespace

GraphClassification classify(const NonCommutingGraph& g) {
  GraphClassification c;
  const int n = g.vertex_count();
  if (n == 0) {
    c.is_empty = true;
    return c;
  }

  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  c.min_degree = *std::min_element(deg.begin(), deg.end());
  c.max_degree = *std::max_element(deg.begin(), deg.end());

  // Connectivity and diameter by all-pairs BFS.
  int diameter = 0;
  c.connected = true;
  for (int v = 0; v < n && c.connected; ++v) {
    const int ecc = eccentricity(g, v);
    if (ecc < 0) c.connected = false;
    else diameter = std::max(diameter, ecc);
  }
  if (c.connected) c.diameter = diameter;

  c.is_complete = c.min_degree == n - 1;
  // Star: one hub adjacent to everything, all other vertices degree 1.
  // (K_2 qualifies: each vertex is a hub for the other.)
  for (int h = 0; h < n && n >= 2 && !c.is_star; ++h) {
    if (deg[h] != n - 1) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (v != h && deg[v] != 1) ok = false;
    c.is_star = ok;
  }

  // Complete multipartite test via the complement: K_{a,b} complement is
  // exactly two disjoint cliques (both parts nonempty by construction).
  if (n >= 2) {
    NonCommutingGraph comp = g.complement();
    std::vector<char> assigned(n, 0);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < n; ++v) {
      if (assigned[v]) continue;
      auto cc = comp.component_of(v);
      for (int u : cc) assigned[u] = 1;
      comps.push_back(std::move(cc));
    }
    c.is_complete_bipartite =
        comps.size() == 2 && is_clique(comp, comps[0]) && is_clique(comp, comps[1]);
  }

  // Lollipop: some bridge whose removal leaves exactly two components, one a
  // complete graph on >= 3 vertices, the other a path (possibly one vertex).
  if (c.connected && n >= 4) {
    for (auto [u, v] : g.edges()) {
      const std::pair<int, int> cut{u, v};
      auto side_u = g.component_of(u, cut);
      if (std::binary_search(side_u.begin(), side_u.end(), v)) continue;  // not a bridge
      auto side_v = g.component_of(v, cut);
      if (side_u.size() + side_v.size() != static_cast<size_t>(n)) continue;
      const bool u_clique = side_u.size() >= 3 && is_clique(g, side_u);
      const bool v_clique = side_v.size() >= 3 && is_clique(g, side_v);
      if ((u_clique && is_path(g, side_v, cut)) ||
          (v_clique && is_path(g, side_u, cut))) {
        c.is_lollipop = true;
        break;
      }
    }
  }
  return c;
}

bool degree_formula_check(const FiniteRing& R, const NonCommutingGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int r = g.vertex_ranks()[v];
    int centralizer_size = 0;
    for (int x = 0; x < R.order(); ++x)
      if (R.commutes(x, r)) ++centralizer_size;
    if (g.degree(v) != R.order() - centralizer_size) return false;
  }
  return true;
}

// --- dominating sets ---

bool is_dominating(const NonCommutingGraph& g, const std::vector<int>& member_ranks) {
  std::vector<char> in_set(g.vertex_count(), 0);
  std::vector<int> members;
  for (int rank : member_ranks) {
    const int idx = g.vertex_index_of_rank(rank);
    if (idx < 0) throw MalformedTable("dominating member is not a vertex");
    in_set[idx] = 1;
    members.push_back(idx);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_set[v]) continue;
    bool covered = false;
    for (int m : members)
      if (g.adjacent(v, m)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

DominatingSet dominating_from_generators(const FiniteRing& R,
                                         const NonCommutingGraph& g,
                                         const ElementSet& s) {
  // The statement this implements assumes a unital ring, where "generates"
  // means the subring closure together with 1; without unity the plain
  // closure is used.
  const bool generates = R.unity() ? is_unital_generating_set(R, s)
                                   : is_generating_set(R, s);
  if (!generates)
    throw NotGeneratingSet("the given set does not generate the ring");

  DominatingSet d;
  d.provenance = DominatingSet::Provenance::from_generators;
  for (int rank : s.ranks)
    if (!R.is_central(rank)) d.member_ranks.push_back(rank);
  std::sort(d.member_ranks.begin(), d.member_ranks.end());

  if (!is_dominating(g, d.member_ranks))
    throw DominationCheckFailed(
        "generator-derived set fails the domination predicate on " + R.name());
  return d;
}

DominatingSet dominating_from_two_generating_sets(const FiniteRing& R,
                                                  const NonCommutingGraph& g,
                                                  const ElementSet& a,
                                                  const ElementSet& b) {
  auto generates = [&](const ElementSet& s) {
    return R.unity() ? is_unital_generating_set(R, s) : is_generating_set(R, s);
  };
  if (!generates(a) || !generates(b))
    throw NotGeneratingSet("both sets must generate the ring");

  std::vector<int> merged = a.ranks;
  merged.insert(merged.end(), b.ranks.begin(), b.ranks.end());
  DominatingSet d;
  d.provenance = DominatingSet::Provenance::from_generators;
  for (int rank : ElementSet::of(std::move(merged)).ranks)
    if (!R.is_central(rank)) d.member_ranks.push_back(rank);

  if (!is_dominating(g, d.member_ranks))
    throw DominationCheckFailed(
        "union of generating sets fails the domination predicate on " + R.name());
  return d;
}

DominatingSet minimum_dominating(const NonCommutingGraph& g, int vertex_cap) {
  const int n = g.vertex_count();
  if (n > vertex_cap || n > 64)
    throw SizeCapExceeded("vertex count " + std::to_string(n) +
                          " exceeds dominating-set search cap " +
                          std::to_string(std::min(vertex_cap, 64)));
  DominatingSet d;
  d.provenance = DominatingSet::Provenance::brute_force_minimum;
  if (n == 0) return d;

  // Closed neighborhoods as bitmasks.
  std::vector<uint64_t> closed(n);
  const uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  for (int v = 0; v < n; ++v) {
    uint64_t mask = uint64_t(1) << v;
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u)) mask |= uint64_t(1) << u;
    closed[v] = mask;
  }

  std::vector<int> pick;
  auto search = [&](auto&& self, int next, int need, uint64_t covered) -> bool {
    if (covered == all) return true;
    if (need == 0) return false;
    for (int v = next; v <= n - need; ++v) {
      pick.push_back(v);
      if (self(self, v + 1, need - 1, covered | closed[v])) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= n; ++size) {
    pick.clear();
    if (search(search, 0, size, 0)) {
      for (int v : pick) d.member_ranks.push_back(g.vertex_ranks()[v]);
      if (!is_dominating(g, d.member_ranks))
        throw Error("minimum dominating set failed re-verification");
      return d;
    }
  }
  throw Error("unreachable: full vertex set always dominates");
}

// --- isomorphism ---

namespace {

// Iterated neighbor-color refinement.  Returns per-vertex color ids such
// that colors are stable under "multiset of neighbor colors".
std::vector<int> refine_colors(const NonCommutingGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {color[v], std::move(nb)};
    }
    std::vector<std::pair<int, std::vector<int>>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct GraphIsoSearch {
  const NonCommutingGraph& a;
  const NonCommutingGraph& b;
  std::vector<int> color_a, color_b;
  std::vector<int> map;      // a-vertex -> b-vertex or -1
  std::vector<char> used;    // b-vertex taken
  std::vector<int> order;    // a-vertices, most-constrained first

  bool consistent(int va, int vb) const {
    if (color_a[va] != color_b[vb]) return false;
    for (int u = 0; u < a.vertex_count(); ++u) {
      if (map[u] < 0) continue;
      if (a.adjacent(va, u) != b.adjacent(vb, map[u])) return false;
    }
    return true;
  }

  bool recurse(size_t depth) {
    if (depth == order.size()) return true;
    const int va = order[depth];
    for (int vb = 0; vb < b.vertex_count(); ++vb) {
      if (used[vb] || !consistent(va, vb)) continue;
      map[va] = vb;
      used[vb] = 1;
      if (recurse(depth + 1)) return true;
      map[va] = -1;
      used[vb] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> graph_isomorphic(const NonCommutingGraph& a,
                                                 const NonCommutingGraph& b,
                                                 int size_cap) {
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  const int n = a.vertex_count();
  if (n > size_cap)
    throw SizeCapExceeded("graph size " + std::to_string(n) +
                          " exceeds isomorphism search cap " +
                          std::to_string(size_cap));
  if (n == 0) return std::vector<int>{};
  if (a.edge_count() != b.edge_count()) return std::nullopt;

  GraphIsoSearch s{a, b};
  s.color_a = refine_colors(a);
  s.color_b = refine_colors(b);
  auto mult_a = s.color_a, mult_b = s.color_b;
  std::sort(mult_a.begin(), mult_a.end());
  std::sort(mult_b.begin(), mult_b.end());
  if (mult_a != mult_b) return std::nullopt;

  s.map.assign(n, -1);
  s.used.assign(n, 0);
  // Rarest color class first cuts the branching early.
  std::map<int, int> class_size;
  for (int c : s.color_a) ++class_size[c];
  s.order.resize(n);
  for (int v = 0; v < n; ++v) s.order[v] = v;
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    if (class_size[s.color_a[x]] != class_size[s.color_a[y]])
      return class_size[s.color_a[x]] < class_size[s.color_a[y]];
    return x < y;
  });
  if (!s.recurse(0)) return std::nullopt;
  return s.map;
}

}  // namespace ncg
