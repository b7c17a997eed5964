#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncg/errors.hpp"

namespace ncg {

// All exhaustive verification loops are cubic in the ring order, so the
// order is capped to keep every check feasible.
inline constexpr int kDefaultOrderCap = 256;

// Additive group shape: direct sum of Z_{d_1} x ... x Z_{d_k}.  Elements are
// identified with their mixed-radix rank; the first coordinate is the most
// significant digit, so rank order equals lexicographic coordinate order.
struct AbelianShape {
  std::vector<int> moduli;

  int order() const;
  int generator_count() const { return static_cast<int>(moduli.size()); }
  int rank(std::span<const int> coords) const;
  std::vector<int> coords(int rank) const;
  int generator_rank(int i) const;  // rank of e_i
  void check(int order_cap = kDefaultOrderCap) const;

  bool operator==(const AbelianShape&) const = default;
};

// Sorted, deduplicated set of element ranks.  Closure flags record which
// closure properties have been verified by the producing operation.
struct ElementSet {
  std::vector<int> ranks;
  bool additively_closed = false;
  bool multiplicatively_closed = false;

  static ElementSet of(std::vector<int> ranks);
  bool contains(int r) const;
  int size() const { return static_cast<int>(ranks.size()); }
  bool operator==(const ElementSet& o) const { return ranks == o.ranks; }
};

// A finite ring on an abelian shape.  Instances can only be produced by the
// validating factories, so a FiniteRing in hand always satisfies the ring
// axioms: componentwise modular addition, exhaustively checked associativity
// and two-sided distributivity.  Unity is detected, never required.
//
// Multiplication is canonically stored as structure constants e_i * e_j and
// materialized into a full rank-indexed table; both addition and
// multiplication are table lookups after construction.  Immutable apart from
// the display name.
class FiniteRing {
 public:
  // Structure constants: k*k ranks, row-major, sc[i*k+j] = e_i * e_j
  // extended biadditively.
  static FiniteRing from_structure_constants(AbelianShape shape,
                                             std::vector<int> sc,
                                             std::string name = {},
                                             int order_cap = kDefaultOrderCap);
  // Full product table: order*order ranks, row-major.
  static FiniteRing from_full_table(AbelianShape shape, std::vector<int> table,
                                    std::string name = {},
                                    int order_cap = kDefaultOrderCap);

  const AbelianShape& shape() const { return shape_; }
  int order() const { return n_; }
  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }

  int add(int a, int b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int commutator(int a, int b) const { return sub(mul(a, b), mul(b, a)); }
  bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }
  int zero() const { return 0; }

  std::optional<int> unity() const { return unity_; }
  bool is_commutative() const { return commutative_; }
  const std::vector<int>& center_ranks() const { return center_; }
  int center_size() const { return static_cast<int>(center_.size()); }
  bool is_central(int r) const { return central_[r]; }

  // k*k ranks; for full-table input these are derived (distributivity makes
  // the multiplication biadditive, so the generator products determine it).
  const std::vector<int>& structure_constants() const { return sc_; }
  std::vector<int> full_table() const { return mul_; }

 private:
  FiniteRing() = default;
  void finish_validation();  // associativity, distributivity, unity, center

  AbelianShape shape_;
  int n_ = 0;
  std::string name_;
  std::vector<int> sc_;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> mul_;
  std::vector<int> center_;
  std::vector<char> central_;
  std::optional<int> unity_;
  bool commutative_ = false;
};

// --- ring-structure operations ---

int commutator(const FiniteRing& R, int a, int b);
ElementSet centralizer(const FiniteRing& R, int r);
ElementSet center(const FiniteRing& R);

// Smallest subset containing S closed under +, -, * (non-unital closure;
// unity is NOT adjoined even when present).
ElementSet generated_subring(const FiniteRing& R, const ElementSet& s);
bool is_generating_set(const FiniteRing& R, const ElementSet& s);
// Closure of S together with the unity element; errors if R has none.
bool is_unital_generating_set(const FiniteRing& R, const ElementSet& s);

// Additive subgroup generated by all commutators [a,b].
ElementSet commutator_subgroup(const FiniteRing& R);

struct AddGroup;  // group.hpp

// Additive quotient R/Z(R).  The transversal holds the minimal-rank
// representative of each coset, with the coset of 0 first and the remaining
// cosets ordered by representative rank.
struct CentralQuotient {
  std::vector<int> transversal;           // coset index -> representative rank
  std::vector<int> coset_of;              // element rank -> coset index
  std::vector<std::vector<int>> cosets;   // coset index -> sorted member ranks
};
CentralQuotient central_quotient(const FiniteRing& R);

}  // namespace ncg
