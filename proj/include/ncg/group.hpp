#pragma once

#include <functional>
#include <vector>

#include "ncg/ring.hpp"

namespace ncg {

inline constexpr int kDefaultGroupCap = 64;

// Finite abelian group on elements 0..n-1 with 0 as the neutral element,
// given by its addition table.  Used for central quotients, commutator
// subgroups and ring additive groups, re-indexed to a dense range.
struct AddGroup {
  int n = 0;
  std::vector<int> add;  // n*n row-major
  std::vector<int> neg;  // n

  int plus(int a, int b) const { return add[static_cast<size_t>(a) * n + b]; }
  int minus(int a) const { return neg[a]; }
  int times(int k, int x) const;  // k-fold sum, k >= 0
  int order_of(int x) const;
  std::vector<int> element_orders() const;  // sorted multiset, iso invariant

  static AddGroup of_shape(const AbelianShape& shape);
  // Subgroup of (R,+) on the given sorted member list, re-indexed 0..m-1.
  static AddGroup subgroup_of_ring(const FiniteRing& R,
                                   const std::vector<int>& members);
  static AddGroup of_quotient(const FiniteRing& R, const CentralQuotient& q);
};

// Greedy generating tuple: repeatedly adjoin the maximal-order element not
// yet in the span (ties by rank).  Span sizes of the prefixes are returned
// for use as pruning targets during isomorphism search.
struct GeneratingTuple {
  std::vector<int> generators;
  std::vector<int> prefix_span_sizes;
  // coefficient expression of every element in the generators
  std::vector<std::vector<int>> coefficients;
};
GeneratingTuple generating_tuple(const AddGroup& g);

// Enumerates every additive isomorphism a -> b in a deterministic order,
// invoking visit with the full element map; stop by returning false.
// Candidate generator images are restricted to order-matching elements and
// pruned by prefix span sizes; each surviving candidate map is verified to
// be an additive bijection before being reported, so the enumeration is
// exact.  Empty if the groups are not isomorphic.
void for_each_additive_isomorphism(
    const AddGroup& a, const AddGroup& b,
    const std::function<bool(const std::vector<int>&)>& visit,
    int size_cap = kDefaultGroupCap);

std::vector<std::vector<int>> additive_isomorphisms(
    const AddGroup& a, const AddGroup& b, int size_cap = kDefaultGroupCap);

bool is_additive_isomorphism(const AddGroup& a, const AddGroup& b,
                             const std::vector<int>& map);

}  // namespace ncg
