#include "fanolab/lattice.hpp"

#include "fanolab/error.hpp"
#include "corpus.hpp"

#include <doctest.h>

#include <random>

using namespace fanolab;

namespace {

// Independent oracle for the cone type: brute-force search for p = (u+av)/r
// over the fundamental parallelogram, both ray orders, smaller a reported.
ConeType cone_type_oracle(const LatticePoint& u, const LatticePoint& v) {
    i64 r = cross(u, v);
    if (r < 0) r = -r;
    if (r == 1) return {1, 0};
    auto param = [&](const LatticePoint& a, const LatticePoint& b) {
        for (i64 t = 1; t < r; ++t) {
            LatticePoint num{a.x + t * b.x, a.y + t * b.y};
            if (num.x % r == 0 && num.y % r == 0) return t;
        }
        return static_cast<i64>(-1);
    };
    i64 a1 = param(u, v), a2 = param(v, u);
    REQUIRE(a1 > 0);
    REQUIRE(a2 > 0);
    return {r, std::min(a1, a2)};
}

} // namespace

TEST_CASE("primitive_part") {
    CHECK(primitive_part({2, 4}) == std::pair<LatticePoint, i64>{{1, 2}, 2});
    CHECK(primitive_part({0, -3}) == std::pair<LatticePoint, i64>{{0, -1}, 3});
    CHECK(primitive_part({1, 1}) == std::pair<LatticePoint, i64>{{1, 1}, 1});
    CHECK_THROWS_AS(primitive_part({0, 0}), Error);
}

TEST_CASE("cone_type basics") {
    CHECK(cone_type({0, 1}, {1, 0}) == ConeType{1, 0});
    CHECK(cone_type({1, 2}, {2, 1}) == ConeType{3, 1});
    // The cone over the width-4 height-1 edge is the A3 singularity 1/4(1,3);
    // oracle-derived (the normalization a <= a^{-1} mod r keeps a = 3).
    CHECK(cone_type_oracle({1, 2}, {1, -2}) == ConeType{4, 3});
    CHECK(cone_type({1, 2}, {1, -2}) == ConeType{4, 3});
    CHECK_THROWS_AS(cone_type({2, 4}, {1, 0}), Error);    // non-primitive
    CHECK_THROWS_AS(cone_type({1, 2}, {-1, -2}), Error);  // dependent
}

TEST_CASE("cone_type r equals |det| and is GL-invariant") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-6, 6);
    int checked = 0;
    while (checked < 200) {
        LatticePoint u{coord(rng), coord(rng)}, v{coord(rng), coord(rng)};
        if (is_zero(u) || is_zero(v) || !is_primitive(u) || !is_primitive(v)) continue;
        if (cross(u, v) == 0) continue;
        ConeType t = cone_type(u, v);
        i64 det = cross(u, v);
        CHECK(t.r == (det < 0 ? -det : det));
        CHECK(t == cone_type_oracle(u, v));
        CHECK(t == cone_type(v, u));  // order-independent after normalization
        UnimodularMap m = corpus::random_unimodular(rng);
        CHECK(t == cone_type(m.apply(u), m.apply(v)));
        ++checked;
    }
}

TEST_CASE("unimodular maps") {
    CHECK_THROWS_AS(UnimodularMap(2, 0, 0, 1), Error);
    UnimodularMap m(3, 2, 1, 1);
    UnimodularMap inv = m.inverse();
    CHECK(m.compose(inv) == UnimodularMap());
    CHECK(inv.compose(m) == UnimodularMap());
    CHECK(m.apply({1, 1}) == LatticePoint{5, 2});
}

TEST_CASE("cone type edge shape") {
    CHECK(cone_type_width({3, 1}) == 1);
    CHECK(cone_type_height({3, 1}) == 3);
    CHECK(cone_type_width({4, 1}) == 2);  // the 1/4(1,1) T-singularity, h = w = 2
    CHECK(cone_type_height({4, 1}) == 2);
    CHECK(cone_type_width({6, 1}) == 2);
    CHECK(cone_type_height({6, 1}) == 3);
    CHECK(cone_type_width({4, 3}) == 4);  // A3: height-1 chain
    CHECK(cone_type_height({4, 3}) == 1);
}
