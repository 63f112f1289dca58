#pragma once

// Polygon mutation and bounded exploration of the mutation graph up to
// unimodular equivalence.

#include "fanolab/lattice.hpp"
#include "fanolab/polygon.hpp"

#include <vector>

namespace fanolab {

// u: primitive inward normal of the edge whose T-cone is contracted
// (heights of the contracted edge are negative with respect to u);
// f: primitive vector with <u|f> = 0, the factor direction F = [0, f].
struct MutationData {
    LatticePoint u;
    LatticePoint f;

    friend bool operator==(const MutationData&, const MutationData&) = default;
};

struct MutationResult {
    FanoPolygon polygon;                     // normal form
    std::vector<LatticePoint> raw_vertices;  // ccw, before normalization
};

// Slice-wise mutation: each slice P_rho (rho = <u|.>) loses |rho| copies of
// [0,f] for rho < 0 and gains rho copies for rho > 0. Errors: NOT_MUTABLE
// when a contracted slice is too short, INVALID_DATA for bad (u, f).
MutationResult mutate_polygon(const FanoPolygon& p, const MutationData& data);

// One entry per edge carrying at least one T-cone, with the canonical factor
// direction (the two orientations give shear-equivalent results).
std::vector<MutationData> available_mutations(const FanoPolygon& p);

struct MutationArrow {
    int from = 0;
    int to = 0;
    MutationData data;
};

struct MutationGraph {
    std::vector<FanoPolygon> nodes;  // normal forms, BFS discovery order
    std::vector<MutationArrow> arrows;
    int exploration_depth = 0;
    bool complete = false;  // frontier exhausted before hitting the limits
};

MutationGraph mutation_graph(const FanoPolygon& p, int max_nodes = 10000, int max_depth = 12);

} // namespace fanolab
