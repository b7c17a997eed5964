// ncg: construct finite rings, build their non-commuting graphs, and verify
// the degree/edge identities, structural theorems, probability bounds and
// Z-isoclinism statements on them.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncg/commuting.hpp"
#include "ncg/families.hpp"
#include "ncg/graph.hpp"
#include "ncg/io.hpp"
#include "ncg/isoclinism.hpp"
#include "ncg/ring.hpp"

namespace fs = std::filesystem;
using namespace ncg;

namespace {

AbelianShape parse_shape(const std::string& text) {
  AbelianShape shape;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      shape.moduli.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw MalformedTable("bad shape component '" + part + "'");
    }
  }
  if (shape.moduli.empty()) throw MalformedTable("empty shape");
  return shape;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

// --- full verification of a single ring ---

struct RingVerdict {
  std::string name;
  int order = 0;
  int center = 0;
  bool has_unity = false;
  bool commutative = false;
  int vertices = 0;
  long long edges = 0;
  Rational pr;
  GraphClassification cls;
  bool edge_identity = false;
  bool degree_formula = false;
  bool pair_counts_agree = false;
  bool structure_ok = false;   // connected, min deg, forbidden shapes, unity/complete
  BoundReport bounds;          // empty for commutative rings
  std::vector<std::string> failures;
  std::vector<std::string> boundary_equalities;
  bool pass() const { return failures.empty(); }
};

RingVerdict verify_ring(const FiniteRing& R) {
  RingVerdict v;
  v.name = R.name();
  v.order = R.order();
  v.center = R.center_size();
  v.has_unity = R.unity().has_value();
  v.commutative = R.is_commutative();

  NonCommutingGraph g = NonCommutingGraph::build(R);
  v.vertices = g.vertex_count();
  v.edges = g.edge_count();
  v.cls = classify(g);

  CommutingStats stats = commuting_probability(R, &g);
  v.pr = stats.pr;

  try {
    verify_edge_identity(R, g);
    v.edge_identity = true;
  } catch (const IdentityViolated& e) {
    v.failures.emplace_back(e.what());
  }

  v.degree_formula = degree_formula_check(R, g);
  if (!v.degree_formula) v.failures.push_back("degree formula failed");

  v.pair_counts_agree =
      commuting_pairs_centralizer_sum(R) == commuting_pairs_pair_scan(R);
  if (!v.pair_counts_agree) v.failures.push_back("commuting pair counts disagree");

  if (!v.commutative) {
    v.structure_ok = true;
    auto structural = [&](bool ok, const std::string& what) {
      if (!ok) {
        v.structure_ok = false;
        v.failures.push_back(what);
      }
    };
    structural(v.cls.connected, "graph disconnected");
    structural(v.cls.min_degree >= 2, "vertex of degree < 2");
    structural(!v.cls.is_star, "graph is a star");
    structural(!v.cls.is_lollipop, "graph is a lollipop");
    structural(!v.cls.is_complete_bipartite, "graph is complete bipartite");
    if (v.has_unity)
      structural(!v.cls.is_complete, "complete graph on a unital ring");

    try {
      v.bounds = bound_suite(R, g, /*throw_on_violation=*/false);
      for (const auto& b : v.bounds.checks) {
        if (!b.holds)
          v.failures.push_back("bound " + b.id + " violated (lhs " +
                               b.lhs.str() + " > rhs " + b.rhs.str() + ")");
        else if (b.slack == Rational(0))
          v.boundary_equalities.push_back(b.id);
      }
    } catch (const Error& e) {
      v.failures.emplace_back(e.what());
    }
  } else {
    // Commutative checks: empty graph, Pr = 1.
    if (!v.cls.is_empty) v.failures.push_back("commutative ring with vertices");
    if (v.pr != Rational(1)) v.failures.push_back("commutative ring with Pr != 1");
  }
  return v;
}

std::string verdict_csv_header() {
  return "name,order,center,unity,commutative,vertices,edges,pr,pr_decimal,"
         "connected,min_degree,max_degree,diameter,is_complete,is_star,"
         "is_lollipop,is_complete_bipartite,edge_identity,degree_formula,"
         "pair_counts_agree,B1,B2,B3,B4,B5,B6,B1_slack,B2_slack,B3_slack,"
         "B4_slack,B5_slack,B6_slack,verdict";
}

std::string verdict_csv_row(const RingVerdict& v) {
  std::ostringstream os;
  os << v.name << "," << v.order << "," << v.center << ","
     << yesno(v.has_unity) << "," << yesno(v.commutative) << "," << v.vertices
     << "," << v.edges << "," << v.pr.str() << "," << v.pr.decimal() << ","
     << (v.cls.connected ? 1 : 0) << "," << v.cls.min_degree << ","
     << v.cls.max_degree << ","
     << (v.cls.diameter ? std::to_string(*v.cls.diameter) : "inf") << ","
     << (v.cls.is_complete ? 1 : 0) << "," << (v.cls.is_star ? 1 : 0) << ","
     << (v.cls.is_lollipop ? 1 : 0) << ","
     << (v.cls.is_complete_bipartite ? 1 : 0) << ","
     << (v.edge_identity ? 1 : 0) << "," << (v.degree_formula ? 1 : 0) << ","
     << (v.pair_counts_agree ? 1 : 0);
  if (v.bounds.checks.size() == 6) {
    for (const auto& b : v.bounds.checks) os << "," << (b.holds ? 1 : 0);
    for (const auto& b : v.bounds.checks) os << "," << b.slack.str();
  } else {
    for (int i = 0; i < 12; ++i) os << ",";
  }
  os << "," << (v.pass() ? "pass" : "FAIL");
  return os.str();
}

void print_verdict_human(const RingVerdict& v) {
  std::cout << v.name << ": order " << v.order << ", |Z| = " << v.center
            << ", unity " << yesno(v.has_unity) << ", "
            << (v.commutative ? "commutative" : "non-commutative") << "\n";
  std::cout << "  graph: " << v.vertices << " vertices, " << v.edges
            << " edges";
  if (v.cls.is_empty) {
    std::cout << " (empty)";
  } else {
    std::cout << ", degrees [" << v.cls.min_degree << "," << v.cls.max_degree
              << "], "
              << (v.cls.connected
                      ? "connected, diameter " + std::to_string(*v.cls.diameter)
                      : "disconnected");
    if (v.cls.is_complete) std::cout << ", complete";
    if (v.cls.is_star) std::cout << ", star";
    if (v.cls.is_lollipop) std::cout << ", lollipop";
    if (v.cls.is_complete_bipartite) std::cout << ", complete bipartite";
  }
  std::cout << "\n";
  std::cout << "  Pr = " << v.pr.str() << " (~" << v.pr.decimal()
            << "), edge identity " << (v.edge_identity ? "ok" : "FAILED")
            << ", degree formula " << (v.degree_formula ? "ok" : "FAILED")
            << "\n";
  if (!v.bounds.checks.empty()) {
    std::cout << "  bounds:";
    for (const auto& b : v.bounds.checks) {
      std::cout << " " << b.id << (b.holds ? " ok" : " VIOLATED") << " (slack "
                << b.slack.str() << ")";
    }
    std::cout << "\n";
  }
  if (!v.boundary_equalities.empty()) {
    std::cout << "  boundary equalities:";
    for (const auto& id : v.boundary_equalities) std::cout << " " << id;
    std::cout << "\n";
  }
  for (const auto& f : v.failures) std::cout << "  FAILURE: " << f << "\n";
}

std::vector<fs::path> census_files(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".json" || ext == ".ring") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// --- subcommand bodies ---

int run_ring_validate(const std::string& path) {
  try {
    FiniteRing R = load_ring_spec(path);
    std::cout << "valid ring: " << R.name() << ", order " << R.order()
              << ", |Z| = " << R.center_size() << ", unity "
              << yesno(R.unity().has_value()) << ", "
              << (R.is_commutative() ? "commutative" : "non-commutative")
              << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "invalid ring spec: " << e.what() << "\n";
    return 1;
  }
}

int run_ring_build(const std::string& family, int n, int m,
                   const std::string& shape_text,
                   const std::vector<std::string>& operand_paths,
                   const std::string& name, const std::string& out) {
  FiniteRing R = [&] {
    if (family == "matrix") return matrix_ring(n, m);
    if (family == "upper_triangular") return upper_triangular_ring(n, m);
    if (family == "row_ring") return row_ring(m);
    if (family == "modular") return modular_ring(m);
    if (family == "zero_ring") {
      if (shape_text.empty()) throw MalformedTable("zero_ring needs --shape");
      return zero_ring(parse_shape(shape_text));
    }
    if (family == "direct_product") {
      if (operand_paths.size() < 2)
        throw MalformedTable("direct_product needs two or more --of files");
      FiniteRing acc = load_ring_spec(operand_paths[0]);
      for (size_t i = 1; i < operand_paths.size(); ++i)
        acc = direct_product(acc, load_ring_spec(operand_paths[i]));
      return acc;
    }
    throw MalformedTable("unknown family '" + family + "'");
  }();
  if (!name.empty()) R.rename(name);
  write_or_print(serialize_ring_spec(R), out);
  if (!out.empty())
    std::cout << "wrote " << R.name() << " (order " << R.order() << ") to "
              << out << "\n";
  return 0;
}

int run_enumerate(const std::string& shape_text, bool noncommutative,
                  bool dedupe, bool unital, long long limit,
                  const std::string& out_dir) {
  CensusOptions opts{parse_shape(shape_text)};
  opts.require_noncommutative = noncommutative;
  opts.require_unital = unital;
  opts.dedupe_isomorphism = dedupe;
  if (limit > 0) opts.limit = limit;

  std::vector<FiniteRing> rings = enumerate_rings(opts);

  // Pair every ring with the census entry carrying its opposite.
  std::vector<int> op_index(rings.size(), -1);
  {
    std::vector<std::vector<int>> canon(rings.size());
    for (size_t i = 0; i < rings.size(); ++i)
      canon[i] = canonical_full_table(rings[i], opts.enumeration_cap);
    for (size_t i = 0; i < rings.size(); ++i) {
      const std::vector<int> op_canon =
          canonical_full_table(opposite(rings[i]), opts.enumeration_cap);
      for (size_t j = 0; j < rings.size(); ++j)
        if (canon[j] == op_canon) {
          op_index[i] = static_cast<int>(j);
          break;
        }
    }
  }

  std::ostringstream summary;
  summary << "index,file,name,order,center,unity,commutative,opposite_index\n";
  for (size_t i = 0; i < rings.size(); ++i) {
    char file[32];
    std::snprintf(file, sizeof file, "ring_%04zu.json", i);
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      save_ring_spec(rings[i], fs::path(out_dir) / file);
    }
    summary << i << "," << file << "," << rings[i].name() << ","
            << rings[i].order() << "," << rings[i].center_size() << ","
            << yesno(rings[i].unity().has_value()) << ","
            << yesno(rings[i].is_commutative()) << "," << op_index[i] << "\n";
  }
  if (!out_dir.empty()) {
    std::ofstream sf(fs::path(out_dir) / "summary.csv");
    sf << summary.str();
  }
  std::cout << summary.str();
  std::cout << "# " << rings.size() << " rings on shape " << shape_text
            << (dedupe ? " up to isomorphism" : "") << "\n";
  return 0;
}

int run_graph_analyze(const std::string& path, const std::string& out) {
  FiniteRing R = load_ring_spec(path);
  NonCommutingGraph g = NonCommutingGraph::build(R);
  std::string text = invariant_csv_header() + "\n" + invariant_csv_row(R, g) + "\n";
  write_or_print(text, out);
  return 0;
}

int run_graph_export_dot(const std::string& path, const std::string& out) {
  FiniteRing R = load_ring_spec(path);
  NonCommutingGraph g = NonCommutingGraph::build(R);
  write_or_print(to_dot(g, &R.shape()), out);
  return 0;
}

int run_verify(const std::vector<std::string>& paths, const std::string& census_dir,
               const std::string& out) {
  std::vector<FiniteRing> rings;
  if (!census_dir.empty()) {
    for (const auto& f : census_files(census_dir))
      rings.push_back(load_ring_spec(f));
  }
  for (const auto& p : paths) rings.push_back(load_ring_spec(p));
  if (rings.empty()) {
    std::cerr << "nothing to verify\n";
    return 2;
  }

  std::ostringstream csv;
  csv << verdict_csv_header() << "\n";
  int failures = 0;
  std::vector<std::string> boundary_notes;
  for (const FiniteRing& R : rings) {
    RingVerdict v = verify_ring(R);
    print_verdict_human(v);
    csv << verdict_csv_row(v) << "\n";
    if (!v.pass()) ++failures;
    for (const auto& id : v.boundary_equalities)
      boundary_notes.push_back(v.name + ":" + id);
  }
  std::cout << "---\n"
            << rings.size() << " rings checked, " << failures << " failures";
  if (!boundary_notes.empty()) {
    std::cout << ", boundary equalities:";
    for (const auto& b : boundary_notes) std::cout << " " << b;
  }
  std::cout << "\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    f << csv.str();
  }
  return failures == 0 ? 0 : 1;
}

int run_isoclinic(const std::string& path1, const std::string& path2) {
  FiniteRing r1 = load_ring_spec(path1);
  FiniteRing r2 = load_ring_spec(path2);
  IsoclinismVerdict v = is_z_isoclinic(r1, r2);
  std::cout << r1.name() << " and " << r2.name() << ": "
            << (v.isoclinic ? "Z-isoclinic" : "not Z-isoclinic") << "\n";
  std::cout << "  phi candidates examined: " << v.stats.phi_candidates
            << ", forced-map conflicts: " << v.stats.forced_map_conflicts
            << ", extension failures: " << v.stats.extension_failures << "\n";
  if (!v.isoclinic) return 0;

  const IsoclinismWitness& w = *v.witness;
  std::cout << "  phi (coset representatives, rank -> rank):\n";
  for (size_t i = 0; i < w.phi.size(); ++i)
    std::cout << "    " << w.transversal1[i] << " + Z1  ->  "
              << w.transversal2[w.phi[i]] << " + Z2\n";
  std::cout << "  psi (commutator subgroup, rank -> rank):\n";
  for (size_t i = 0; i < w.psi.size(); ++i)
    std::cout << "    " << w.commutator_members1[i] << "  ->  "
              << w.commutator_members2[w.psi[i]] << "\n";

  if (r1.is_commutative() || r2.is_commutative()) return 0;
  IsoclinismTheoremReport rep = verify_isoclinism_theorem(r1, r2);
  std::cout << "  Pr(" << r1.name() << ") = " << rep.pr1.str() << ", Pr("
            << r2.name() << ") = " << rep.pr2.str()
            << (rep.pr_equal ? " (equal)" : " (DIFFER)") << "\n";
  if (rep.centers_equal_order)
    std::cout << "  |Z| equal -> non-commuting graphs isomorphic: "
              << yesno(rep.graphs_isomorphic) << "\n";
  else
    std::cout << "  centers differ in order; the graph conclusion does not apply\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite rings, non-commuting graphs and their verification"};
  app.require_subcommand(1);

  // ring validate / ring build
  auto* ring_cmd = app.add_subcommand("ring", "build or validate ring spec files");
  ring_cmd->require_subcommand(1);
  auto* validate_cmd = ring_cmd->add_subcommand("validate", "check a ring spec file");
  std::string validate_path;
  validate_cmd->add_option("spec", validate_path, "ring spec file")->required();

  auto* build_cmd = ring_cmd->add_subcommand("build", "construct a family ring");
  std::string family, build_shape, build_name, build_out;
  int build_n = 2, build_m = 2;
  std::vector<std::string> build_operands;
  build_cmd->add_option("--family", family,
                        "matrix | upper_triangular | row_ring | zero_ring | "
                        "modular | direct_product")
      ->required();
  build_cmd->add_option("--n", build_n, "matrix size");
  build_cmd->add_option("--m", build_m, "modulus");
  build_cmd->add_option("--shape", build_shape, "moduli for zero_ring, e.g. 2,2");
  build_cmd->add_option("--of", build_operands, "operand spec files for direct_product");
  build_cmd->add_option("--name", build_name, "override the ring name");
  build_cmd->add_option("--out", build_out, "output spec file (default stdout)");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive ring census on a shape");
  std::string enum_shape, enum_out;
  bool enum_noncomm = false, enum_dedupe = false, enum_unital = false;
  long long enum_limit = 0;
  enum_cmd->add_option("--shape", enum_shape, "additive shape, e.g. 2,2")->required();
  enum_cmd->add_flag("--noncommutative", enum_noncomm, "keep only non-commutative rings");
  enum_cmd->add_flag("--dedupe", enum_dedupe, "deduplicate up to ring isomorphism");
  enum_cmd->add_flag("--unital", enum_unital, "keep only rings with unity");
  enum_cmd->add_option("--limit", enum_limit, "stop after this many rings");
  enum_cmd->add_option("--out", enum_out, "directory for ring files + summary.csv");

  // graph analyze / export-dot
  auto* graph_cmd = app.add_subcommand("graph", "analyze or export the non-commuting graph");
  graph_cmd->require_subcommand(1);
  auto* analyze_cmd = graph_cmd->add_subcommand("analyze", "print the invariant row");
  std::string analyze_path, analyze_out;
  analyze_cmd->add_option("spec", analyze_path, "ring spec file")->required();
  analyze_cmd->add_option("--out", analyze_out, "output CSV (default stdout)");
  auto* dot_cmd = graph_cmd->add_subcommand("export-dot", "emit DOT");
  std::string dot_path, dot_out;
  dot_cmd->add_option("spec", dot_path, "ring spec file")->required();
  dot_cmd->add_option("--out", dot_out, "output file (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
  std::vector<std::string> verify_paths;
  std::string verify_census, verify_out;
  verify_cmd->add_option("spec", verify_paths, "ring spec files");
  verify_cmd->add_option("--census", verify_census, "directory of ring spec files");
  verify_cmd->add_option("--out", verify_out, "CSV report path");

  // isoclinic
  auto* iso_cmd = app.add_subcommand("isoclinic", "decide Z-isoclinism of two rings");
  std::string iso_path1, iso_path2;
  iso_cmd->add_option("spec1", iso_path1, "first ring spec")->required();
  iso_cmd->add_option("spec2", iso_path2, "second ring spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return run_ring_validate(validate_path);
    if (build_cmd->parsed())
      return run_ring_build(family, build_n, build_m, build_shape,
                            build_operands, build_name, build_out);
    if (enum_cmd->parsed())
      return run_enumerate(enum_shape, enum_noncomm, enum_dedupe, enum_unital,
                           enum_limit, enum_out);
    if (analyze_cmd->parsed()) return run_graph_analyze(analyze_path, analyze_out);
    if (dot_cmd->parsed()) return run_graph_export_dot(dot_path, dot_out);
    if (verify_cmd->parsed()) return run_verify(verify_paths, verify_census, verify_out);
    if (iso_cmd->parsed()) return run_isoclinic(iso_path1, iso_path2);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
