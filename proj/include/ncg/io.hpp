#pragma once

#include <filesystem>
#include <string>

#include "ncg/graph.hpp"
#include "ncg/ring.hpp"

namespace ncg {

// Ring spec file, JSON with a versioned format tag:
//   {
//     "format": "ncg-ring/1",
//     "name": "...",
//     "shape": [2, 2],
//     "structure_constants": [[[c...],[c...]], ...],   (k x k coordinate vectors)
//    or
//     "full_table": [[r, ...], ...],                   (order x order element ranks)
//     "unity": [c...] | null
//   }
// Exactly one of structure_constants / full_table must be present.  The
// serializer always emits the canonical structure-constant form and the
// detected unity; output is byte-stable for a given ring.
inline constexpr const char* kRingSpecFormat = "ncg-ring/1";

FiniteRing parse_ring_spec(const std::string& text,
                           int order_cap = kDefaultOrderCap);
FiniteRing load_ring_spec(const std::filesystem::path& path,
                          int order_cap = kDefaultOrderCap);
std::string serialize_ring_spec(const FiniteRing& R);
void save_ring_spec(const FiniteRing& R, const std::filesystem::path& path);

// DOT export with deterministic vertex/edge order; ring vertices are
// labeled "rank:(coords)", synthetic ones by vertex id.
std::string to_dot(const NonCommutingGraph& g, const AbelianShape* shape = nullptr);

// One CSV row of graph/ring invariants.
std::string invariant_csv_header();
std::string invariant_csv_row(const FiniteRing& R, const NonCommutingGraph& g);

}  // namespace ncg
