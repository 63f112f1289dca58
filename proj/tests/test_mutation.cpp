#include "fanolab/mutation.hpp"

#include "fanolab/cones.hpp"
#include "fanolab/error.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace fanolab;

TEST_CASE("the worked pentagon mutation, raw vertices") {
    // factor F = [(0,0), (-1,0)], heights measured downward
    MutationData data{{0, -1}, {-1, 0}};
    MutationResult res = mutate_polygon(corpus::pentagon_before(), data);
    CHECK(FanoPolygon::validate(res.raw_vertices) == corpus::pentagon_after());
    CHECK(res.polygon == corpus::pentagon_after().normal_form());
    CHECK(singularity_content(corpus::pentagon_before()) ==
          singularity_content(FanoPolygon::validate(res.raw_vertices)));
}

TEST_CASE("mutation is reversible") {
    MutationData data{{0, -1}, {-1, 0}};
    MutationResult fwd = mutate_polygon(corpus::pentagon_before(), data);
    FanoPolygon mid = FanoPolygon::validate(fwd.raw_vertices);
    // inverse: contract the T-cone added on the opposite side
    MutationData inverse{{0, 1}, {-1, 0}};
    MutationResult back = mutate_polygon(mid, inverse);
    CHECK(back.polygon == corpus::pentagon_before().normal_form());
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(mutate_polygon(corpus::p2(), MutationData{{0, 1}, {1, 1}}), Error);  // pairing
    // contracting across a rigid edge fails the Minkowski condition
    MutationData rigid{{-2, 1}, primitive_part(LatticePoint{1, 2}).first};
    CHECK_THROWS_AS(mutate_polygon(corpus::quad_5_third(), rigid), Error);
}

TEST_CASE("available mutations") {
    CHECK(available_mutations(corpus::p2()).size() == 3);
    CHECK(available_mutations(corpus::triangle_all_rigid()).empty());
    CHECK(available_mutations(corpus::hexagon_two_thirds()).size() == 4);
    for (const MutationData& d : available_mutations(corpus::pentagon_before()))
        CHECK_NOTHROW(mutate_polygon(corpus::pentagon_before(), d));
}

TEST_CASE("both factor orientations give the same normal form") {
    for (const FanoPolygon& p : {corpus::pentagon_before(), corpus::hexagon_two_thirds()}) {
        for (const MutationData& d : available_mutations(p)) {
            MutationData flipped{d.u, -d.f};
            CHECK(mutate_polygon(p, d).polygon == mutate_polygon(p, flipped).polygon);
        }
    }
}

TEST_CASE("mutation graphs") {
    MutationGraph g = mutation_graph(corpus::p2(), 100, 1);
    CHECK(g.nodes.size() >= 1);
    CHECK(g.nodes[0] == corpus::p2().normal_form());
    for (const FanoPolygon& node : g.nodes)
        CHECK(singularity_content(node) == singularity_content(corpus::p2()));

    g = mutation_graph(corpus::pentagon_before(), 100, 1);
    bool found = false;
    for (const FanoPolygon& node : g.nodes)
        if (node == corpus::pentagon_after().normal_form()) found = true;
    CHECK(found);

    // content and degree are invariants across every node
    for (const FanoPolygon& seed :
         {corpus::hexagon_two_thirds(), corpus::triangle_5_third(), corpus::quad_5_third()}) {
        MutationGraph graph = mutation_graph(seed, 60, 2);
        for (const FanoPolygon& node : graph.nodes) {
            CHECK(singularity_content(node) == singularity_content(seed));
            CHECK(node.anticanonical_degree() == seed.anticanonical_degree());
        }
        // every arrow has an inverse restoring the source
        for (const MutationArrow& a : graph.arrows) {
            MutationData inverse{-a.data.u, a.data.f};
            bool restored = false;
            // the inverse contracts the opposite edge of the *target*; search
            // its available mutations for one that maps back
            for (const MutationData& d : available_mutations(graph.nodes[a.to])) {
                try {
                    if (mutate_polygon(graph.nodes[a.to], d).polygon == graph.nodes[a.from])
                        restored = true;
                } catch (const Error&) {
                }
            }
            (void)inverse;
            CHECK(restored);
        }
    }
}

TEST_CASE("graph caps are reported") {
    MutationGraph g = mutation_graph(corpus::pentagon_before(), 3, 12);
    CHECK_FALSE(g.complete);
    CHECK(static_cast<int>(g.nodes.size()) <= 3);
}
