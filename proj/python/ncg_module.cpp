// Python bindings for the ring / non-commuting graph toolkit.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncg/commuting.hpp"
#include "ncg/families.hpp"
#include "ncg/graph.hpp"
#include "ncg/io.hpp"
#include "ncg/isoclinism.hpp"
#include "ncg/ring.hpp"

namespace py = pybind11;
using namespace ncg;

namespace {

AbelianShape shape_from_list(const std::vector<int>& moduli) {
  return AbelianShape{moduli};
}

ElementSet set_from_list(const std::vector<int>& ranks) {
  return ElementSet::of(ranks);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite rings, non-commuting graphs, commuting probability and "
            "Z-isoclinism";

  py::register_exception<Error>(m, "NcgError");

  py::class_<Rational>(m, "Rational")
      .def(py::init<long long, long long>(), py::arg("num"), py::arg("den") = 1)
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
      .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
      .def("__float__",
           [](const Rational& r) { return double(r.num()) / double(r.den()); })
      .def("decimal", &Rational::decimal, py::arg("places") = 6);

  py::class_<FiniteRing>(m, "Ring")
      .def_property_readonly("name", &FiniteRing::name)
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly(
          "shape", [](const FiniteRing& r) { return r.shape().moduli; })
      .def_property_readonly("is_commutative", &FiniteRing::is_commutative)
      .def_property_readonly(
          "unity", [](const FiniteRing& r) { return r.unity(); })
      .def_property_readonly("center", &FiniteRing::center_ranks)
      .def_property_readonly("center_size", &FiniteRing::center_size)
      .def_property_readonly("structure_constants",
                             &FiniteRing::structure_constants)
      .def("full_table", &FiniteRing::full_table)
      .def("add", &FiniteRing::add)
      .def("neg", &FiniteRing::neg)
      .def("sub", &FiniteRing::sub)
      .def("mul", &FiniteRing::mul)
      .def("commutator",
           [](const FiniteRing& r, int a, int b) { return r.commutator(a, b); })
      .def("commutes", &FiniteRing::commutes)
      .def("is_central", &FiniteRing::is_central)
      .def("coords",
           [](const FiniteRing& r, int rank) { return r.shape().coords(rank); })
      .def("rank",
           [](const FiniteRing& r, const std::vector<int>& coords) {
             return r.shape().rank(coords);
           })
      .def("rename", &FiniteRing::rename)
      .def("__repr__", [](const FiniteRing& r) {
        return "<Ring " + r.name() + " order " + std::to_string(r.order()) + ">";
      });

  m.def("ring_from_structure_constants",
        [](const std::vector<int>& moduli, const std::vector<int>& sc,
           const std::string& name) {
          return FiniteRing::from_structure_constants(shape_from_list(moduli),
                                                      sc, name);
        },
        py::arg("moduli"), py::arg("structure_constants"), py::arg("name") = "");
  m.def("ring_from_full_table",
        [](const std::vector<int>& moduli, const std::vector<int>& table,
           const std::string& name) {
          return FiniteRing::from_full_table(shape_from_list(moduli), table, name);
        },
        py::arg("moduli"), py::arg("full_table"), py::arg("name") = "");

  // families
  m.def("matrix_ring", [](int n, int m) { return matrix_ring(n, m); });
  m.def("upper_triangular_ring",
        [](int n, int m) { return upper_triangular_ring(n, m); });
  m.def("row_ring", [](int m) { return row_ring(m); });
  m.def("zero_ring",
        [](const std::vector<int>& moduli) { return zero_ring(shape_from_list(moduli)); });
  m.def("modular_ring", [](int m) { return modular_ring(m); });
  m.def("direct_product",
        [](const FiniteRing& a, const FiniteRing& b) { return direct_product(a, b); });
  m.def("opposite", &opposite);

  m.def("enumerate_rings",
        [](const std::vector<int>& moduli, bool noncommutative, bool dedupe,
           bool unital, std::optional<long long> limit) {
          CensusOptions opts{shape_from_list(moduli)};
          opts.require_noncommutative = noncommutative;
          opts.dedupe_isomorphism = dedupe;
          opts.require_unital = unital;
          opts.limit = limit;
          return enumerate_rings(opts);
        },
        py::arg("moduli"), py::arg("noncommutative") = false,
        py::arg("dedupe") = false, py::arg("unital") = false,
        py::arg("limit") = std::nullopt);
  m.def("ring_isomorphic",
        [](const FiniteRing& a, const FiniteRing& b) { return ring_isomorphic(a, b); });
  m.def("abelian_shapes_of_order", [](int order) {
    std::vector<std::vector<int>> out;
    for (const auto& s : abelian_shapes_of_order(order)) out.push_back(s.moduli);
    return out;
  });

  // structure queries
  m.def("centralizer",
        [](const FiniteRing& r, int x) { return centralizer(r, x).ranks; });
  m.def("center", [](const FiniteRing& r) { return center(r).ranks; });
  m.def("generated_subring",
        [](const FiniteRing& r, const std::vector<int>& s) {
          return generated_subring(r, set_from_list(s)).ranks;
        });
  m.def("is_generating_set",
        [](const FiniteRing& r, const std::vector<int>& s) {
          return is_generating_set(r, set_from_list(s));
        });
  m.def("is_unital_generating_set",
        [](const FiniteRing& r, const std::vector<int>& s) {
          return is_unital_generating_set(r, set_from_list(s));
        });
  m.def("commutator_subgroup",
        [](const FiniteRing& r) { return commutator_subgroup(r).ranks; });
  m.def("central_quotient", [](const FiniteRing& r) {
    CentralQuotient q = central_quotient(r);
    py::dict out;
    out["transversal"] = q.transversal;
    out["cosets"] = q.cosets;
    out["coset_of"] = q.coset_of;
    return out;
  });

  // graphs
  py::class_<NonCommutingGraph>(m, "Graph")
      .def_property_readonly("vertex_count", &NonCommutingGraph::vertex_count)
      .def_property_readonly("vertex_ranks", &NonCommutingGraph::vertex_ranks)
      .def_property_readonly("ring_name", &NonCommutingGraph::ring_name)
      .def("adjacent", &NonCommutingGraph::adjacent)
      .def("degree", &NonCommutingGraph::degree)
      .def("edge_count", &NonCommutingGraph::edge_count)
      .def("edges", &NonCommutingGraph::edges)
      .def("__repr__", [](const NonCommutingGraph& g) {
        return "<Graph " + g.ring_name() + " n=" +
               std::to_string(g.vertex_count()) + " m=" +
               std::to_string(g.edge_count()) + ">";
      });

  m.def("build_graph", &NonCommutingGraph::build);
  m.def("graph_from_edges",
        [](int n, const std::vector<std::pair<int, int>>& edges,
           const std::string& label) {
          return NonCommutingGraph::from_edges(n, edges, label);
        },
        py::arg("n"), py::arg("edges"), py::arg("label") = "synthetic");

  py::class_<GraphClassification>(m, "GraphClassification")
      .def_readonly("is_empty", &GraphClassification::is_empty)
      .def_readonly("connected", &GraphClassification::connected)
      .def_readonly("diameter", &GraphClassification::diameter)
      .def_readonly("min_degree", &GraphClassification::min_degree)
      .def_readonly("max_degree", &GraphClassification::max_degree)
      .def_readonly("is_complete", &GraphClassification::is_complete)
      .def_readonly("is_star", &GraphClassification::is_star)
      .def_readonly("is_lollipop", &GraphClassification::is_lollipop)
      .def_readonly("is_complete_bipartite",
                    &GraphClassification::is_complete_bipartite);
  m.def("classify", &classify);
  m.def("degree_formula_check", &degree_formula_check);

  m.def("is_dominating", &is_dominating);
  m.def("dominating_from_generators",
        [](const FiniteRing& r, const NonCommutingGraph& g,
           const std::vector<int>& s) {
          return dominating_from_generators(r, g, set_from_list(s)).member_ranks;
        });
  m.def("dominating_from_two_generating_sets",
        [](const FiniteRing& r, const NonCommutingGraph& g,
           const std::vector<int>& a, const std::vector<int>& b) {
          return dominating_from_two_generating_sets(r, g, set_from_list(a),
                                                     set_from_list(b))
              .member_ranks;
        });
  m.def("minimum_dominating",
        [](const NonCommutingGraph& g) { return minimum_dominating(g).member_ranks; });
  m.def("graph_isomorphic",
        [](const NonCommutingGraph& a, const NonCommutingGraph& b) {
          return graph_isomorphic(a, b);
        });

  // commuting probability
  py::class_<CommutingStats>(m, "CommutingStats")
      .def_readonly("ring_order", &CommutingStats::ring_order)
      .def_readonly("center_order", &CommutingStats::center_order)
      .def_readonly("commuting_pairs", &CommutingStats::commuting_pairs)
      .def_readonly("pr", &CommutingStats::pr)
      .def_readonly("edge_count", &CommutingStats::edge_count)
      .def_readonly("smallest_prime", &CommutingStats::smallest_prime);
  m.def("commuting_probability",
        [](const FiniteRing& r) { return commuting_probability(r); });

  py::class_<EdgeIdentityReport>(m, "EdgeIdentityReport")
      .def_readonly("twice_edges", &EdgeIdentityReport::twice_edges)
      .def_readonly("order_sq_minus_pairs",
                    &EdgeIdentityReport::order_sq_minus_pairs)
      .def_readonly("holds", &EdgeIdentityReport::holds);
  m.def("verify_edge_identity", &verify_edge_identity);

  py::class_<BoundCheck>(m, "BoundCheck")
      .def_readonly("id", &BoundCheck::id)
      .def_readonly("description", &BoundCheck::description)
      .def_readonly("lhs", &BoundCheck::lhs)
      .def_readonly("rhs", &BoundCheck::rhs)
      .def_readonly("holds", &BoundCheck::holds)
      .def_readonly("slack", &BoundCheck::slack)
      .def_readonly("external", &BoundCheck::external);
  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("checks", &BoundReport::checks)
      .def_readonly("all_hold", &BoundReport::all_hold);
  m.def("bound_suite",
        [](const FiniteRing& r, const NonCommutingGraph& g) {
          return bound_suite(r, g, /*throw_on_violation=*/false);
        });

  py::class_<TrivialCenterScan::NearMiss>(m, "NearMiss")
      .def_readonly("ring_name", &TrivialCenterScan::NearMiss::ring_name)
      .def_readonly("pr", &TrivialCenterScan::NearMiss::pr)
      .def_readonly("target", &TrivialCenterScan::NearMiss::target)
      .def_readonly("gap", &TrivialCenterScan::NearMiss::gap);
  py::class_<TrivialCenterScan>(m, "TrivialCenterScan")
      .def_readonly("rings_checked", &TrivialCenterScan::rings_checked)
      .def_readonly("exact_matches", &TrivialCenterScan::exact_matches)
      .def_readonly("nearest", &TrivialCenterScan::nearest);
  m.def("scan_trivial_center", [](const std::vector<FiniteRing>& census) {
    return scan_trivial_center(census);
  });

  py::class_<PrConsistencyReport>(m, "PrConsistencyReport")
      .def_readonly("z_orders_match", &PrConsistencyReport::z_orders_match)
      .def_readonly("graphs_isomorphic", &PrConsistencyReport::graphs_isomorphic)
      .def_readonly("applicable", &PrConsistencyReport::applicable)
      .def_readonly("pr1", &PrConsistencyReport::pr1)
      .def_readonly("pr2", &PrConsistencyReport::pr2)
      .def_readonly("pr_equal", &PrConsistencyReport::pr_equal);
  m.def("pr_graph_consistency", &pr_graph_consistency);

  // isoclinism
  py::class_<IsoclinismWitness>(m, "IsoclinismWitness")
      .def_readonly("phi", &IsoclinismWitness::phi)
      .def_readonly("psi", &IsoclinismWitness::psi)
      .def_readonly("transversal1", &IsoclinismWitness::transversal1)
      .def_readonly("transversal2", &IsoclinismWitness::transversal2)
      .def_readonly("commutator_members1", &IsoclinismWitness::commutator_members1)
      .def_readonly("commutator_members2", &IsoclinismWitness::commutator_members2);
  py::class_<IsoclinismSearchStats>(m, "IsoclinismSearchStats")
      .def_readonly("phi_candidates", &IsoclinismSearchStats::phi_candidates)
      .def_readonly("forced_map_conflicts",
                    &IsoclinismSearchStats::forced_map_conflicts)
      .def_readonly("extension_failures",
                    &IsoclinismSearchStats::extension_failures);
  py::class_<IsoclinismVerdict>(m, "IsoclinismVerdict")
      .def_readonly("isoclinic", &IsoclinismVerdict::isoclinic)
      .def_readonly("witness", &IsoclinismVerdict::witness)
      .def_readonly("stats", &IsoclinismVerdict::stats);
  m.def("is_z_isoclinic",
        [](const FiniteRing& a, const FiniteRing& b) { return is_z_isoclinic(a, b); });
  m.def("commutators_ignore_central_shifts", &commutators_ignore_central_shifts);

  py::class_<IsoclinismTheoremReport>(m, "IsoclinismTheoremReport")
      .def_readonly("centers_equal_order",
                    &IsoclinismTheoremReport::centers_equal_order)
      .def_readonly("isoclinic", &IsoclinismTheoremReport::isoclinic)
      .def_readonly("graph_conclusion_checked",
                    &IsoclinismTheoremReport::graph_conclusion_checked)
      .def_readonly("graphs_isomorphic",
                    &IsoclinismTheoremReport::graphs_isomorphic)
      .def_readonly("pr1", &IsoclinismTheoremReport::pr1)
      .def_readonly("pr2", &IsoclinismTheoremReport::pr2)
      .def_readonly("pr_equal", &IsoclinismTheoremReport::pr_equal);
  m.def("verify_isoclinism_theorem", &verify_isoclinism_theorem);

  // io
  m.def("load_ring", [](const std::string& path) { return load_ring_spec(path); });
  m.def("parse_ring", [](const std::string& text) { return parse_ring_spec(text); });
  m.def("serialize_ring", &serialize_ring_spec);
  m.def("save_ring", [](const FiniteRing& r, const std::string& path) {
    save_ring_spec(r, path);
  });
  m.def("to_dot", [](const NonCommutingGraph& g, const FiniteRing* ring) {
    return to_dot(g, ring ? &ring->shape() : nullptr);
  }, py::arg("graph"), py::arg("ring") = nullptr);
}
