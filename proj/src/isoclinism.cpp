#include "ncg/isoclinism.hpp"

#include <algorithm>
#include <sstream>

#include "ncg/commuting.hpp"
#include "ncg/graph.hpp"

namespace ncg {

bool commutators_ignore_central_shifts(const FiniteRing& R) {
  const auto& z = R.center_ranks();
  for (int u = 0; u < R.order(); ++u)
    for (int v = 0; v < R.order(); ++v) {
      const int base = R.commutator(u, v);
      for (int z1 : z)
        for (int z2 : z)
          if (R.commutator(R.add(u, z1), R.add(v, z2)) != base) return false;
    }
  return true;
}

namespace {

struct RingIsoclinismData {
  CentralQuotient quotient;
  AddGroup q_group;
  std::vector<int> k_members;        // sorted ranks of [R,R]
  AddGroup k_group;
  std::vector<int> k_index_of;       // rank -> index in k_members, -1 outside
  std::vector<int> coset_commutator; // q*q -> K index of [t_i, t_j]
};

RingIsoclinismData analyze(const FiniteRing& R) {
  RingIsoclinismData d;
  d.quotient = central_quotient(R);
  d.q_group = AddGroup::of_quotient(R, d.quotient);
  d.k_members = commutator_subgroup(R).ranks;
  d.k_group = AddGroup::subgroup_of_ring(R, d.k_members);
  d.k_index_of.assign(R.order(), -1);
  for (size_t i = 0; i < d.k_members.size(); ++i)
    d.k_index_of[d.k_members[i]] = static_cast<int>(i);

  const int q = d.q_group.n;
  d.coset_commutator.assign(static_cast<size_t>(q) * q, 0);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const int c = R.commutator(d.quotient.transversal[i], d.quotient.transversal[j]);
      const int idx = d.k_index_of[c];
      if (idx < 0) throw Error("commutator escaped the commutator subgroup");
      d.coset_commutator[static_cast<size_t>(i) * q + j] = idx;
    }
  return d;
}

std::string describe_ring(const FiniteRing& R) {
  std::ostringstream os;
  os << R.name() << " shape [";
  for (size_t i = 0; i < R.shape().moduli.size(); ++i)
    os << (i ? "," : "") << R.shape().moduli[i];
  os << "] sc (";
  for (size_t i = 0; i < R.structure_constants().size(); ++i)
    os << (i ? " " : "") << R.structure_constants()[i];
  os << ")";
  return os.str();
}

// Full from-scratch witness verification: both maps are additive bijections
// and the compatibility condition holds on every coset pair.
bool verify_witness(const RingIsoclinismData& d1, const RingIsoclinismData& d2,
                    const std::vector<int>& phi, const std::vector<int>& psi) {
  if (!is_additive_isomorphism(d1.q_group, d2.q_group, phi)) return false;
  if (!is_additive_isomorphism(d1.k_group, d2.k_group, psi)) return false;
  const int q = d1.q_group.n;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (psi[d1.coset_commutator[static_cast<size_t>(i) * q + j]] !=
          d2.coset_commutator[static_cast<size_t>(phi[i]) * q + phi[j]])
        return false;
  return true;
}

}  // namespace

IsoclinismVerdict is_z_isoclinic(const FiniteRing& r1, const FiniteRing& r2,
                                 int size_cap) {
  IsoclinismVerdict verdict;

  // The compatibility condition quantifies over coset representatives; the
  // searches below use fixed transversals, which is only sound because
  // commutators ignore central shifts.  Verified, not assumed.
  if (!commutators_ignore_central_shifts(r1) ||
      !commutators_ignore_central_shifts(r2))
    throw Error("commutator failed to be constant on central cosets");

  RingIsoclinismData d1 = analyze(r1);
  RingIsoclinismData d2 = analyze(r2);
  if (d1.q_group.n != d2.q_group.n || d1.k_group.n != d2.k_group.n)
    return verdict;
  if (d1.q_group.n > size_cap || d1.k_group.n > size_cap)
    throw SizeCapExceeded("quotient or commutator subgroup exceeds cap " +
                          std::to_string(size_cap));

  const int q = d1.q_group.n;
  const int kn = d1.k_group.n;

  // Distinct commutator indices in K1, for the forced-map extension.
  std::vector<int> commutator_set;
  {
    std::vector<char> seen(kn, 0);
    for (int idx : d1.coset_commutator)
      if (!seen[idx]) {
        seen[idx] = 1;
        commutator_set.push_back(idx);
      }
  }

  for_each_additive_isomorphism(
      d1.q_group, d2.q_group,
      [&](const std::vector<int>& phi) {
        ++verdict.stats.phi_candidates;

        // phi forces psi on every commutator; reject on conflict or
        // non-injectivity of the forced assignments.
        std::vector<int> forced(kn, -1);
        std::vector<int> forced_from(kn, -1);  // target -> source
        for (int i = 0; i < q; ++i)
          for (int j = 0; j < q; ++j) {
            const int src = d1.coset_commutator[static_cast<size_t>(i) * q + j];
            const int dst =
                d2.coset_commutator[static_cast<size_t>(phi[i]) * q + phi[j]];
            if (forced[src] == -1) {
              if (forced_from[dst] != -1 && forced_from[dst] != src) {
                ++verdict.stats.forced_map_conflicts;
                return true;
              }
              forced[src] = dst;
              forced_from[dst] = src;
            } else if (forced[src] != dst) {
              ++verdict.stats.forced_map_conflicts;
              return true;
            }
          }

        // Extend the forced map additively over K1: every element is a sum
        // of commutators (the commutator set is negation-closed), so a
        // breadth-first span determines the only possible extension.
        std::vector<int> psi(kn, -1);
        psi[0] = 0;
        std::vector<int> frontier = {0};
        while (!frontier.empty()) {
          std::vector<int> next;
          for (int e : frontier)
            for (int c : commutator_set) {
              const int e2 = d1.k_group.plus(e, c);
              if (psi[e2] == -1) {
                psi[e2] = d2.k_group.plus(psi[e], forced[c]);
                next.push_back(e2);
              }
            }
          frontier = std::move(next);
        }
        if (std::count(psi.begin(), psi.end(), -1) > 0 ||
            !is_additive_isomorphism(d1.k_group, d2.k_group, psi)) {
          ++verdict.stats.extension_failures;
          return true;
        }
        for (int c : commutator_set)
          if (psi[c] != forced[c]) {
            ++verdict.stats.extension_failures;
            return true;
          }

        if (!verify_witness(d1, d2, phi, psi)) {
          ++verdict.stats.extension_failures;
          return true;
        }

        IsoclinismWitness w;
        w.phi = phi;
        w.psi = psi;
        w.transversal1 = d1.quotient.transversal;
        w.transversal2 = d2.quotient.transversal;
        w.commutator_members1 = d1.k_members;
        w.commutator_members2 = d2.k_members;
        verdict.isoclinic = true;
        verdict.witness = std::move(w);
        return false;  // first witness in enumeration order
      },
      size_cap);
  return verdict;
}

IsoclinismTheoremReport verify_isoclinism_theorem(const FiniteRing& r1,
                                                  const FiniteRing& r2) {
  if (r1.is_commutative() || r2.is_commutative())
    throw Error("isoclinism theorem check requires non-commutative rings");

  IsoclinismTheoremReport rep;
  rep.centers_equal_order = r1.center_size() == r2.center_size();
  rep.verdict = is_z_isoclinic(r1, r2);
  rep.isoclinic = rep.verdict.isoclinic;
  rep.pr1 = commuting_probability(r1).pr;
  rep.pr2 = commuting_probability(r2).pr;
  rep.pr_equal = rep.pr1 == rep.pr2;

  if (rep.isoclinic && !rep.pr_equal)
    throw TheoremViolated("Z-isoclinic rings with different Pr: " +
                          describe_ring(r1) + " has Pr " + rep.pr1.str() +
                          ", " + describe_ring(r2) + " has Pr " + rep.pr2.str());

  if (rep.isoclinic && rep.centers_equal_order) {
    rep.graph_conclusion_checked = true;
    NonCommutingGraph g1 = NonCommutingGraph::build(r1);
    NonCommutingGraph g2 = NonCommutingGraph::build(r2);
    rep.graphs_isomorphic = graph_isomorphic(g1, g2).has_value();
    if (!rep.graphs_isomorphic)
      throw TheoremViolated(
          "Z-isoclinic rings with equal centers but non-isomorphic graphs: " +
          describe_ring(r1) + " vs " + describe_ring(r2));
  }
  return rep;
}

}  // namespace ncg
