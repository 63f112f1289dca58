#pragma once

// T-cone / R-cone decomposition of the cones over the edges of a Fano
// polygon, and the singularity content (k, basket).

#include "fanolab/lattice.hpp"
#include "fanolab/polygon.hpp"

#include <optional>
#include <vector>

namespace fanolab {

struct RConeData {
    i64 r = 0;
    i64 a = 0;
    i64 height = 0;
    i64 width = 0;  // 0 < width < height

    friend bool operator==(const RConeData&, const RConeData&) = default;
    friend auto operator<=>(const RConeData&, const RConeData&) = default;
};

struct SubSpan {
    LatticePoint from;
    LatticePoint to;
};

struct EdgeDecomposition {
    Edge edge;
    i64 t_cone_count = 0;                 // k = floor(w/h)
    std::vector<SubSpan> t_cone_spans;    // laid out after the R-cone
    std::optional<SubSpan> r_cone_span;   // leftmost (from the tail), width = w mod h
    std::optional<RConeData> r_cone;
};

EdgeDecomposition decompose_edge(const Edge& e);

struct SingularityContent {
    i64 k_total = 0;
    std::vector<RConeData> basket;  // sorted; compared as a multiset

    friend bool operator==(const SingularityContent&, const SingularityContent&) = default;
};

SingularityContent singularity_content(const FanoPolygon& p);

// Interior lattice points of P strictly inside some R-cone (with the
// canonical leftmost placement; the count is placement-independent).
std::vector<LatticePoint> r_cone_interior_points(const FanoPolygon& p);
i64 r_cone_interior_point_count(const FanoPolygon& p);

// True if q lies strictly inside cone(a, b) (a, b independent).
bool strictly_inside_cone(const LatticePoint& a, const LatticePoint& b, const LatticePoint& q);

} // namespace fanolab
