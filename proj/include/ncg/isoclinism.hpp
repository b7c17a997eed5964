#pragma once

#include <optional>
#include <vector>

#include "ncg/group.hpp"
#include "ncg/rational.hpp"
#include "ncg/ring.hpp"

namespace ncg {

// Witness for Z-isoclinism: phi maps central-quotient cosets (indexed as in
// central_quotient), psi maps commutator-subgroup members (indexed into the
// sorted member lists).  Both are additive isomorphisms and satisfy the
// compatibility condition psi([u,v]) = [u',v'] on coset representatives.
struct IsoclinismWitness {
  std::vector<int> phi;         // coset index in R1 -> coset index in R2
  std::vector<int> psi;         // member index in [R1,R1] -> member index in [R2,R2]
  std::vector<int> transversal1, transversal2;  // coset representative ranks
  std::vector<int> commutator_members1, commutator_members2;  // sorted ranks
};

struct IsoclinismSearchStats {
  long long phi_candidates = 0;       // additive isomorphisms examined
  long long forced_map_conflicts = 0; // psi forced inconsistently
  long long extension_failures = 0;   // forced psi does not extend additively
};

struct IsoclinismVerdict {
  bool isoclinic = false;
  std::optional<IsoclinismWitness> witness;
  IsoclinismSearchStats stats;
};

// Exhaustive check that commutators only depend on cosets mod the center:
// [u+z, v+z'] == [u,v] for all u, v and central z, z'.  This is what makes
// the compatibility condition on representatives meaningful; it is verified
// per ring rather than assumed.
bool commutators_ignore_central_shifts(const FiniteRing& R);

// Decides Z-isoclinism by enumerating additive isomorphisms phi between the
// central quotients; each phi forces psi on the commutator set, and the
// search only has to check that the forced map extends to an additive
// isomorphism of the commutator subgroups.  Any witness found is re-verified
// from scratch before being returned.  Deterministic first-witness order.
IsoclinismVerdict is_z_isoclinic(const FiniteRing& r1, const FiniteRing& r2,
                                 int size_cap = kDefaultGroupCap);

struct IsoclinismTheoremReport {
  bool centers_equal_order = false;
  bool isoclinic = false;
  bool graph_conclusion_checked = false;  // both hypotheses held
  bool graphs_isomorphic = false;
  Rational pr1;
  Rational pr2;
  bool pr_equal = false;
  IsoclinismVerdict verdict;
};

// For Z-isoclinic rings with equal-order centers the non-commuting graphs
// must be isomorphic; for Z-isoclinic rings the commuting probabilities must
// be equal (no center hypothesis needed).  Violations throw TheoremViolated
// with both ring specs in the message.
IsoclinismTheoremReport verify_isoclinism_theorem(const FiniteRing& r1,
                                                  const FiniteRing& r2);

}  // namespace ncg
