#pragma once

// Fano polygons: validation, edge data, lattice-point enumeration, the
// anticanonical degree K^2 and a canonical GL(N) normal form.

#include "fanolab/lattice.hpp"
#include "fanolab/rational.hpp"

#include <vector>

namespace fanolab {

struct Edge {
    LatticePoint tail;
    LatticePoint head;
    LatticePoint inward_normal;  // primitive, pairs to -height on the edge
    i64 height = 0;
    i64 width = 0;  // lattice points on the edge minus one
};

// Strict convex hull (collinear points dropped), counterclockwise.
std::vector<LatticePoint> convex_hull_ccw(std::vector<LatticePoint> pts);

class FanoPolygon {
public:
    FanoPolygon() = default;  // empty; only validate() produces usable values

    // Validates and returns the polygon with vertices counterclockwise,
    // anchored at the lexicographically smallest vertex. Errors: NOT_2D,
    // ORIGIN_NOT_INTERIOR, NONPRIMITIVE_VERTEX, NOT_CONVEX.
    static FanoPolygon validate(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    std::vector<Edge> edges() const;

    std::vector<LatticePoint> lattice_points() const;
    std::vector<LatticePoint> interior_lattice_points() const;
    std::vector<LatticePoint> boundary_lattice_points() const;

    bool contains(const LatticePoint& p) const;
    bool strictly_contains(const LatticePoint& p) const;

    // Twice the Euclidean area (shoelace), always positive.
    i64 area2() const;

    // K^2 of the toric variety of the spanning fan: sum over vertices of
    // r/(h_left * h_right).
    Rat anticanonical_degree() const;

    // Normalized volume of the dual polygon; equals anticanonical_degree.
    Rat dual_volume() const;

    FanoPolygon transformed(const UnimodularMap& m) const;

    // Canonical representative of the GL(N)-orbit; deterministic, idempotent.
    FanoPolygon normal_form() const;

    friend bool operator==(const FanoPolygon&, const FanoPolygon&) = default;
    friend auto operator<=>(const FanoPolygon&, const FanoPolygon&) = default;

private:
    std::vector<LatticePoint> vertices_;  // ccw, anchored
};

} // namespace fanolab
