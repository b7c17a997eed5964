#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ncg/ring.hpp"

namespace ncg {

// Exhaustive census stays cubic-feasible only for tiny orders.
inline constexpr int kDefaultEnumerationCap = 16;

enum class FamilyKind {
  matrix,            // M_n(Z_m)
  upper_triangular,  // UT_n(Z_m)
  row_ring,          // {[[x,y],[0,0]] : x,y in Z_m}
  zero_ring,         // all products zero on a given shape
  modular,           // Z_m
  direct_product,
};

struct FamilySpec {
  FamilyKind kind;
  int n = 0;                        // matrix size
  int m = 0;                        // modulus
  AbelianShape shape;               // zero_ring only
  std::vector<FamilySpec> operands; // direct_product only
};

FiniteRing build_family(const FamilySpec& spec, int order_cap = kDefaultOrderCap);

FiniteRing matrix_ring(int n, int m, int order_cap = kDefaultOrderCap);
FiniteRing upper_triangular_ring(int n, int m, int order_cap = kDefaultOrderCap);
FiniteRing row_ring(int m, int order_cap = kDefaultOrderCap);
FiniteRing zero_ring(AbelianShape shape, int order_cap = kDefaultOrderCap);
FiniteRing modular_ring(int m, int order_cap = kDefaultOrderCap);
FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b,
                          int order_cap = kDefaultOrderCap);

// Same additive group, reversed multiplication.
FiniteRing opposite(const FiniteRing& R);

struct CensusOptions {
  AbelianShape shape;
  bool require_noncommutative = false;
  bool require_unital = false;
  bool dedupe_isomorphism = false;
  std::optional<long long> limit;
  int enumeration_cap = kDefaultEnumerationCap;
};

// Yields every associative biadditive multiplication on the shape, in
// lexicographic structure-constant order.  Candidate tables are pruned by
// partial generator-triple associativity during the backtracking walk and
// every survivor passes the full validating factory (all-triples
// associativity and distributivity), so non-biadditive extensions on mixed
// moduli are rejected as well.  Deterministic.
void enumerate_rings(const CensusOptions& opts,
                     const std::function<bool(FiniteRing&&)>& yield);
std::vector<FiniteRing> enumerate_rings(const CensusOptions& opts);

// Additive+multiplicative bijection R1 -> R2, or nullopt.  Searched over
// additive-group isomorphisms with fingerprint pruning; exhaustive, hence
// definitive, up to the search cap.
std::optional<std::vector<int>> ring_isomorphic(const FiniteRing& r1,
                                                const FiniteRing& r2,
                                                int search_cap = 16);

// Lexicographically minimal full multiplication table over all additive
// automorphisms of the shape group; equal iff isomorphic (same shape).
std::vector<int> canonical_full_table(const FiniteRing& R, int search_cap = 16);

// Invariant-factor shapes of every abelian group of the given order,
// deterministically ordered.
std::vector<AbelianShape> abelian_shapes_of_order(int order);

}  // namespace ncg
