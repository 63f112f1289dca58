#pragma once

// Sectional genus, mutable genus, genus under a mutability assignment, and
// the order of the Picard-Fuchs operator.

#include "fanolab/laurent.hpp"
#include "fanolab/polygon.hpp"

#include <vector>

namespace fanolab {

struct EdgeGenusBreakdown {
    int edge = 0;
    i64 t_cone_count = 0;
    i64 t_cone_height = 0;
    i64 r_cone_interior = 0;
};

struct GenusReport {
    i64 sectional_genus = 0;
    i64 mutable_genus = 0;
    i64 operator_order = 0;
    std::vector<EdgeGenusBreakdown> per_edge;
};

// Number of interior lattice points.
i64 sectional_genus(const FanoPolygon& p);

// Interior points of the R-cones, counting the origin.
i64 mutable_genus(const FanoPolygon& p);

// sectional_genus - sum of h(h-1)/2 over the given mutable T-cones.
i64 genus_for_assignment(const FanoPolygon& p, const std::vector<TConeRef>& mutable_cones);

std::vector<TConeRef> all_t_cones(const FanoPolygon& p);

// 2 * mutable_genus.
i64 operator_order(const FanoPolygon& p);

GenusReport genus_report(const FanoPolygon& p);

} // namespace fanolab
