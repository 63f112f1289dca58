#include "fanolab/polygon.hpp"

#include "fanolab/error.hpp"
#include "corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace fanolab;

namespace {

bool has_error(ErrorCode code, const std::vector<LatticePoint>& pts) {
    try {
        FanoPolygon::validate(pts);
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

const Edge& edge_between(const std::vector<Edge>& edges, const LatticePoint& a,
                         const LatticePoint& b) {
    for (const Edge& e : edges)
        if ((e.tail == a && e.head == b) || (e.tail == b && e.head == a)) return e;
    REQUIRE(false);
    static Edge dummy;
    return dummy;
}

} // namespace

TEST_CASE("validate") {
    CHECK_NOTHROW(FanoPolygon::validate({{0, 1}, {1, 0}, {-1, -1}}));
    CHECK(has_error(ErrorCode::ORIGIN_NOT_INTERIOR, {{0, 1}, {1, 0}, {2, 2}}));
    CHECK(has_error(ErrorCode::NONPRIMITIVE_VERTEX, {{0, 2}, {2, 0}, {-2, -2}}));
    CHECK(has_error(ErrorCode::NOT_2D, {{1, 0}, {2, 0}, {3, 0}}));
    CHECK(has_error(ErrorCode::NOT_CONVEX, {{0, 1}, {1, 0}, {-1, -1}, {1, 1}, {2, 1}}));
    // input is order-insensitive
    CHECK(FanoPolygon::validate({{1, 0}, {-1, -1}, {0, 1}}) == corpus::p2());
}

TEST_CASE("edge heights and widths") {
    auto pent = corpus::pentagon_before().edges();
    const Edge& top = edge_between(pent, {-1, 2}, {3, 2});
    CHECK(top.height == 2);
    CHECK(top.width == 4);
    auto hexa = corpus::hexagon_two_thirds().edges();
    const Edge& rigid = edge_between(hexa, {1, 2}, {2, 1});
    CHECK(rigid.height == 3);
    CHECK(rigid.width == 1);
    for (const Edge& e : corpus::p2().edges()) {
        CHECK(e.height == 1);
        CHECK(e.width == 1);
    }
}

TEST_CASE("lattice point enumeration") {
    CHECK(corpus::p2().interior_lattice_points() == std::vector<LatticePoint>{{0, 0}});
    CHECK(corpus::square2().interior_lattice_points() == std::vector<LatticePoint>{{0, 0}});
    auto interior = corpus::hexagon_two_thirds().interior_lattice_points();
    // Pick-verified count (the hexagon has area 11, boundary 12): 6 points.
    CHECK(interior.size() == 6);
    auto in = [&](LatticePoint p) {
        return std::find(interior.begin(), interior.end(), p) != interior.end();
    };
    CHECK(in({-1, 1}));
    CHECK(in({1, 1}));
    CHECK(in({0, 0}));
}

TEST_CASE("boundary widths and Pick's identity") {
    for (const FanoPolygon& p : corpus::all()) {
        i64 boundary = 0;
        for (const Edge& e : p.edges()) {
            boundary += e.width;
            // lattice points on the edge = width + 1
            LatticePoint step = primitive_part(e.head - e.tail).first;
            i64 count = 0;
            for (i64 j = 0; j <= e.width; ++j)
                count += p.contains(e.tail + step * j) ? 1 : 0;
            CHECK(count == e.width + 1);
        }
        CHECK(static_cast<i64>(p.boundary_lattice_points().size()) == boundary);
        i64 interior = static_cast<i64>(p.interior_lattice_points().size());
        CHECK(p.area2() == 2 * interior + boundary - 2);  // Pick
    }
}

TEST_CASE("anticanonical degree equals the dual volume") {
    CHECK(corpus::p2().anticanonical_degree() == 9);
    CHECK(corpus::pentagon_before().anticanonical_degree() == Rat(4) / 3);
    CHECK(corpus::p2_plus_xy().anticanonical_degree() == 8);
    for (const FanoPolygon& p : corpus::all())
        CHECK(p.anticanonical_degree() == p.dual_volume());
}

TEST_CASE("normal form is canonical") {
    std::mt19937 rng(23);
    for (const FanoPolygon& p : corpus::all()) {
        FanoPolygon nf = p.normal_form();
        CHECK(nf.normal_form() == nf);  // idempotent
        UnimodularMap rot(0, -1, 1, 0);
        CHECK(p.transformed(rot).normal_form() == nf);
        for (int i = 0; i < 6; ++i) {
            UnimodularMap m = corpus::random_unimodular(rng);
            CHECK(p.transformed(m).normal_form() == nf);
        }
    }
    CHECK(corpus::p2().normal_form() ==
          FanoPolygon::validate({{1, 0}, {0, 1}, {-1, -1}}).normal_form());
    // distinct singularity content forces distinct normal forms
    CHECK(corpus::pentagon_before().normal_form() != corpus::hexagon_two_thirds().normal_form());
}
