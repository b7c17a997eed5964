#pragma once

// Test-only brute-force oracles.  These deliberately bypass the library's
// structure queries (centralizer/center/graph/closure code) and recompute
// everything from raw add/mul lookups, so they stay an independent route
// for every derived value frozen in the tests.

#include <numeric>
#include <set>
#include <vector>

#include "ncg/ring.hpp"

namespace oracles {

inline long long commuting_pairs(const ncg::FiniteRing& R) {
  long long count = 0;
  for (int a = 0; a < R.order(); ++a)
    for (int b = 0; b < R.order(); ++b)
      if (R.mul(a, b) == R.mul(b, a)) ++count;
  return count;
}

inline int centralizer_size(const ncg::FiniteRing& R, int r) {
  int count = 0;
  for (int x = 0; x < R.order(); ++x)
    if (R.mul(x, r) == R.mul(r, x)) ++count;
  return count;
}

inline std::vector<int> center(const ncg::FiniteRing& R) {
  std::vector<int> z;
  for (int r = 0; r < R.order(); ++r)
    if (centralizer_size(R, r) == R.order()) z.push_back(r);
  return z;
}

// Degree of a vertex of the non-commuting graph, counted directly.
inline int graph_degree(const ncg::FiniteRing& R, int r) {
  int d = 0;
  for (int s = 0; s < R.order(); ++s)
    if (s != r && R.mul(r, s) != R.mul(s, r)) ++d;
  return d;
}

inline long long graph_edges(const ncg::FiniteRing& R) {
  long long twice = 0;
  for (int r = 0; r < R.order(); ++r) twice += graph_degree(R, r);
  return twice / 2;
}

// Associativity of an arbitrary raw table (not necessarily a valid ring).
inline bool associative(int n, const std::vector<int>& table) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[static_cast<size_t>(table[static_cast<size_t>(a) * n + b]) * n + c] !=
            table[static_cast<size_t>(a) * n + table[static_cast<size_t>(b) * n + c]])
          return false;
  return true;
}

inline bool distributive(const ncg::FiniteRing& R, const std::vector<int>& table) {
  const int n = R.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (table[static_cast<size_t>(a) * n + R.add(b, c)] !=
            R.add(table[static_cast<size_t>(a) * n + b], table[static_cast<size_t>(a) * n + c]))
          return false;
        if (table[static_cast<size_t>(R.add(a, b)) * n + c] !=
            R.add(table[static_cast<size_t>(a) * n + c], table[static_cast<size_t>(b) * n + c]))
          return false;
      }
  return true;
}

// Closure of a seed set under +, - and * by repeated sweeps.
inline std::vector<int> subring_closure(const ncg::FiniteRing& R, std::vector<int> seed) {
  std::set<int> members(seed.begin(), seed.end());
  members.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(members.begin(), members.end());
    for (int x : snapshot) {
      if (members.insert(R.neg(x)).second) grew = true;
      for (int y : snapshot) {
        if (members.insert(R.add(x, y)).second) grew = true;
        if (members.insert(R.mul(x, y)).second) grew = true;
      }
    }
  }
  return {members.begin(), members.end()};
}

// Additive closure of all commutators.
inline std::vector<int> commutator_additive_closure(const ncg::FiniteRing& R) {
  std::set<int> members = {0};
  for (int a = 0; a < R.order(); ++a)
    for (int b = 0; b < R.order(); ++b)
      members.insert(R.sub(R.mul(a, b), R.mul(b, a)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(members.begin(), members.end());
    for (int x : snapshot) {
      if (members.insert(R.neg(x)).second) grew = true;
      for (int y : snapshot)
        if (members.insert(R.add(x, y)).second) grew = true;
    }
  }
  return {members.begin(), members.end()};
}

// Connectivity of the non-commuting graph by union-find over ranks.
inline bool noncommuting_graph_connected(const ncg::FiniteRing& R) {
  std::vector<int> vertices;
  for (int r = 0; r < R.order(); ++r)
    if (centralizer_size(R, r) < R.order()) vertices.push_back(r);
  if (vertices.empty()) return false;
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (R.mul(vertices[i], vertices[j]) != R.mul(vertices[j], vertices[i]))
        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  for (size_t i = 1; i < vertices.size(); ++i)
    if (find(static_cast<int>(i)) != find(0)) return false;
  return true;
}

inline bool dominates(const ncg::FiniteRing& R, const std::vector<int>& members) {
  for (int r = 0; r < R.order(); ++r) {
    if (centralizer_size(R, r) == R.order()) continue;  // central, not a vertex
    bool in_set = false;
    for (int m : members)
      if (m == r) in_set = true;
    if (in_set) continue;
    bool covered = false;
    for (int m : members)
      if (R.mul(r, m) != R.mul(m, r)) covered = true;
    if (!covered) return false;
  }
  return true;
}

}  // namespace oracles
