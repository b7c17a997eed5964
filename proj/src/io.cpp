#include "ncg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ncg/commuting.hpp"

namespace ncg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<int> coord_vector(const nlohmann::json& j, const AbelianShape& shape,
                              const char* what) {
  if (!j.is_array() || j.size() != shape.moduli.size())
    throw MalformedTable(std::string(what) + " must be a coordinate vector of length " +
                         std::to_string(shape.moduli.size()));
  std::vector<int> c(shape.moduli.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (!j[i].is_number_integer()) throw MalformedTable("coordinate must be an integer");
    const long long v = j[i].get<long long>();
    if (v < 0 || v >= shape.moduli[i])
      throw MalformedTable(std::string(what) + " coordinate " + std::to_string(i) +
                           " out of range [0," + std::to_string(shape.moduli[i]) + ")");
    c[i] = static_cast<int>(v);
  }
  return c;
}

}  // namespace

FiniteRing parse_ring_spec(const std::string& text, int order_cap) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedTable(std::string("ring spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("format") ||
      doc["format"] != kRingSpecFormat)
    throw MalformedTable(std::string("ring spec must declare format \"") +
                         kRingSpecFormat + "\"");
  if (!doc.contains("shape") || !doc["shape"].is_array() || doc["shape"].empty())
    throw MalformedTable("ring spec needs a nonempty shape array");

  AbelianShape shape;
  for (const auto& m : doc["shape"]) {
    if (!m.is_number_integer()) throw MalformedTable("shape moduli must be integers");
    shape.moduli.push_back(m.get<int>());
  }
  shape.check(order_cap);

  const std::string name = doc.value("name", std::string{});
  const bool has_sc = doc.contains("structure_constants");
  const bool has_full = doc.contains("full_table");
  if (has_sc == has_full)
    throw MalformedTable(
        "ring spec needs exactly one of structure_constants / full_table");

  FiniteRing ring = [&] {
    if (has_sc) {
      const auto& rows = doc["structure_constants"];
      const int k = shape.generator_count();
      if (!rows.is_array() || static_cast<int>(rows.size()) != k)
        throw MalformedTable("structure_constants must be a k x k array");
      std::vector<int> sc;
      for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != k)
          throw MalformedTable("structure_constants must be a k x k array");
        for (const auto& entry : row)
          sc.push_back(shape.rank(coord_vector(entry, shape, "structure constant")));
      }
      return FiniteRing::from_structure_constants(shape, std::move(sc), name,
                                                  order_cap);
    }
    const auto& rows = doc["full_table"];
    const int n = shape.order();
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw MalformedTable("full_table must be an order x order array of ranks");
    std::vector<int> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw MalformedTable("full_table must be an order x order array of ranks");
      for (const auto& entry : row) {
        if (!entry.is_number_integer())
          throw MalformedTable("full_table entries must be integer ranks");
        table.push_back(entry.get<int>());
      }
    }
    return FiniteRing::from_full_table(shape, std::move(table), name, order_cap);
  }();

  // A declared unity must match the detected one.
  if (doc.contains("unity") && !doc["unity"].is_null()) {
    const int declared = ring.shape().rank(
        coord_vector(doc["unity"], ring.shape(), "unity"));
    if (!ring.unity() || *ring.unity() != declared)
      throw MalformedTable("declared unity is not the multiplicative identity");
  }
  return ring;
}

FiniteRing load_ring_spec(const std::filesystem::path& path, int order_cap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ring spec " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_spec(buf.str(), order_cap);
}

std::string serialize_ring_spec(const FiniteRing& R) {
  const AbelianShape& shape = R.shape();
  const int k = shape.generator_count();
  ordered_json doc;
  doc["format"] = kRingSpecFormat;
  doc["name"] = R.name();
  doc["shape"] = shape.moduli;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < k; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < k; ++j)
      row.push_back(shape.coords(R.structure_constants()[static_cast<size_t>(i) * k + j]));
    rows.push_back(std::move(row));
  }
  doc["structure_constants"] = std::move(rows);
  if (R.unity())
    doc["unity"] = shape.coords(*R.unity());
  else
    doc["unity"] = nullptr;
  return doc.dump(2) + "\n";
}

void save_ring_spec(const FiniteRing& R, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write ring spec " + path.string());
  out << serialize_ring_spec(R);
}

std::string to_dot(const NonCommutingGraph& g, const AbelianShape* shape) {
  std::ostringstream os;
  os << "graph noncommuting {\n";
  os << "  label=\"" << g.ring_name() << "\";\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int rank = g.vertex_ranks()[v];
    os << "  v" << rank << " [label=\"" << rank;
    if (shape) {
      os << ":(";
      const auto c = shape->coords(rank);
      for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << ")";
    }
    os << "\"];\n";
  }
  for (auto [u, v] : g.edges())
    os << "  v" << g.vertex_ranks()[u] << " -- v" << g.vertex_ranks()[v] << ";\n";
  os << "}\n";
  return os.str();
}

std::string invariant_csv_header() {
  return "name,order,center,unity,vertices,edges,min_degree,max_degree,"
         "diameter,connected,is_empty,is_complete,is_star,is_lollipop,"
         "is_complete_bipartite,pr,pr_decimal";
}

std::string invariant_csv_row(const FiniteRing& R, const NonCommutingGraph& g) {
  const GraphClassification c = classify(g);
  const CommutingStats stats = commuting_probability(R, &g);
  std::ostringstream os;
  os << R.name() << "," << R.order() << "," << R.center_size() << ","
     << (R.unity() ? "yes" : "no") << "," << g.vertex_count() << ","
     << g.edge_count() << "," << c.min_degree << "," << c.max_degree << ","
     << (c.diameter ? std::to_string(*c.diameter) : "inf") << ","
     << (c.connected ? 1 : 0) << "," << (c.is_empty ? 1 : 0) << ","
     << (c.is_complete ? 1 : 0) << "," << (c.is_star ? 1 : 0) << ","
     << (c.is_lollipop ? 1 : 0) << "," << (c.is_complete_bipartite ? 1 : 0)
     << "," << stats.pr.str() << "," << stats.pr.decimal();
  return os.str();
}

}  // namespace ncg
