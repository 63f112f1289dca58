#include "fanolab/genus.hpp"

#include "fanolab/cones.hpp"
#include "fanolab/mutation.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace fanolab;

TEST_CASE("sectional genus") {
    CHECK(sectional_genus(corpus::p2()) == 1);
    CHECK(sectional_genus(corpus::pentagon_before()) == 8);
    // Pick-verified count for the two-rigid-cone hexagon
    CHECK(sectional_genus(corpus::hexagon_two_thirds()) == 6);
}

TEST_CASE("mutable genus") {
    CHECK(mutable_genus(corpus::p2()) == 1);
    CHECK(mutable_genus(corpus::triangle_5_third()) == 2);
    CHECK(mutable_genus(corpus::quad_5_third()) == 2);
    CHECK(mutable_genus(corpus::hexagon_two_thirds()) == 3);
    CHECK(mutable_genus(corpus::pentagon_before()) == 2);
}

TEST_CASE("genus for an assignment") {
    for (const FanoPolygon& p : corpus::all()) {
        CHECK(genus_for_assignment(p, all_t_cones(p)) == mutable_genus(p));
        CHECK(genus_for_assignment(p, {}) == sectional_genus(p));
    }
    // interior points split between T-cone interiors and rigid interiors
    FanoPolygon pent = corpus::pentagon_before();
    i64 t_interior = 0;
    for (const Edge& e : pent.edges()) {
        EdgeDecomposition d = decompose_edge(e);
        t_interior += d.t_cone_count * e.height * (e.height - 1) / 2;
    }
    CHECK(sectional_genus(pent) - t_interior == mutable_genus(pent));
}

TEST_CASE("operator order") {
    CHECK(operator_order(corpus::p2()) == 2);
    CHECK(operator_order(corpus::triangle_5_third()) == 4);
    CHECK(operator_order(corpus::quad_5_third()) == 4);
    for (const FanoPolygon& p : corpus::all()) {
        CHECK(operator_order(p) % 2 == 0);
        CHECK(operator_order(p) >= 2);
    }
}

TEST_CASE("mutable genus is constant on mutation graphs") {
    for (const FanoPolygon& seed :
         {corpus::p2(), corpus::pentagon_before(), corpus::hexagon_two_thirds()}) {
        MutationGraph g = mutation_graph(seed, 40, 2);
        for (const FanoPolygon& node : g.nodes)
            CHECK(mutable_genus(node) == mutable_genus(seed));
    }
}

TEST_CASE("genus report") {
    GenusReport r = genus_report(corpus::hexagon_two_thirds());
    CHECK(r.sectional_genus == 6);
    CHECK(r.mutable_genus == 3);
    CHECK(r.operator_order == 6);
    i64 rigid_interior = 0;
    for (const auto& b : r.per_edge) rigid_interior += b.r_cone_interior;
    CHECK(rigid_interior == 2);
}
