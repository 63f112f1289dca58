#include "fanolab/laurent.hpp"

#include "fanolab/cones.hpp"
#include "fanolab/error.hpp"
#include "fanolab/genus.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace fanolab;

namespace {

LaurentPolynomial poly(std::initializer_list<std::pair<LatticePoint, long>> terms) {
    LaurentPolynomial f;
    for (const auto& [e, c] : terms) f.set(e, Rat(c));
    return f;
}

LaurentPolynomial p2_poly() { return poly({{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, 1}}); }

ParamId param_at(const SymbolicLaurentPolynomial& f, const LatticePoint& p) {
    std::string name = "a(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    for (size_t i = 0; i < f.parameter_names.size(); ++i)
        if (f.parameter_names[i] == name) return static_cast<ParamId>(i);
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("newton polygon") {
    CHECK(newton_polygon(p2_poly()) == corpus::p2());
    CHECK(newton_polygon(poly({{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, 1}, {{1, 1}, 1}})) ==
          corpus::p2_plus_xy());
    CHECK_THROWS_AS(newton_polygon(poly({{{0, 0}, 5}})), Error);
    // interior support points are fine
    CHECK(newton_polygon(poly({{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, 1}, {{0, 0}, 7}})) ==
          corpus::p2());
}

TEST_CASE("slices") {
    LaurentPolynomial f = p2_poly();
    auto s = slice(f, {0, 1}, 1);
    REQUIRE(s.size() == 1);
    CHECK(s.begin()->second == 1);
    CHECK(slice(f, {0, 1}, 5).empty());

    // hexagon top edge at height 2 reads 1 + 2X + X^2
    auto mm = standard_mmlp(corpus::hexagon_two_thirds(), EdgeMode::BINOMIAL, 1);
    std::map<ParamId, Rat> zero;
    for (ParamId id : mm.f.free_parameters()) zero[id] = Rat(1);
    auto top = slice(mm.f.substitute(zero), {0, 1}, 2);
    std::vector<Rat> coeffs;
    for (auto& [t, c] : top) coeffs.push_back(c);
    CHECK(coeffs == std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
}

TEST_CASE("is_mutable") {
    LaurentPolynomial f = p2_poly();
    for (const Edge& e : corpus::p2().edges())
        CHECK(is_mutable(f, e.inward_normal, LinearFactor{}));

    // hexagon standard family at generic rational parameters: mutable over
    // every T-edge
    auto mm = standard_mmlp(corpus::hexagon_two_thirds(), EdgeMode::BINOMIAL, 1);
    std::map<ParamId, Rat> vals;
    long v = 5;
    for (ParamId id : mm.f.free_parameters()) vals[id] = Rat(v++);
    LaurentPolynomial g = mm.f.substitute(vals);
    for (const MutationData& d : available_mutations(corpus::hexagon_two_thirds()))
        CHECK(is_mutable(g, d.u, LinearFactor{}));

    // perturbing an edge row (1,3,1 instead of 1,2,1) kills divisibility
    LaurentPolynomial bad = g;
    bad.set({0, 2}, Rat(3));
    CHECK_FALSE(is_mutable(bad, {0, -1}, LinearFactor{}));
}

TEST_CASE("mutate_laurent polygon compatibility and round trip") {
    auto mm = standard_mmlp(corpus::pentagon_before(), EdgeMode::BINOMIAL, 1);
    std::map<ParamId, Rat> vals;
    for (ParamId id : mm.f.free_parameters()) vals[id] = Rat(2);
    LaurentPolynomial f = mm.f.substitute(vals);

    MutationData data{{0, -1}, {-1, 0}};
    LaurentPolynomial g = mutate_laurent(f, data.u, LinearFactor{}, data.f);
    CHECK(newton_polygon(g) ==
          FanoPolygon::validate(mutate_polygon(corpus::pentagon_before(), data).raw_vertices));
    // exact inverse
    LaurentPolynomial back = mutate_laurent(g, -data.u, LinearFactor{}, data.f);
    CHECK(back == f);

    LaurentPolynomial not_div = p2_poly();
    CHECK_THROWS_AS(mutate_laurent(not_div, {0, 1}, LinearFactor{Rat(1), Rat(2)}, {1, 0}), Error);
}

TEST_CASE("standard MMLP of P^2 and the quartic quad") {
    auto mm = standard_mmlp(corpus::p2());
    CHECK(mm.f.free_parameters().empty());
    CHECK(mm.stabilized);
    LaurentPolynomial f = mm.f.substitute({});
    CHECK(f == p2_poly());

    mm = standard_mmlp(corpus::p2_plus_xy());
    CHECK(mm.f.free_parameters().empty());
    CHECK(mm.f.substitute({}) ==
          poly({{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("standard MMLP reproduces the worked coefficient grid") {
    auto mm = standard_mmlp(corpus::hexagon_two_thirds(), EdgeMode::BINOMIAL, 2);
    REQUIRE(mm.f.free_parameters().size() == 2);
    CHECK(mm.stabilized);
    ParamId p = param_at(mm.f, {-1, 1});
    ParamId q = param_at(mm.f, {1, 1});
    auto expect = [&](LatticePoint e, const AffineExpression& want) {
        CHECK(mm.f.coeff(e) == want);
    };
    AffineExpression P = AffineExpression::parameter(p);
    AffineExpression Q = AffineExpression::parameter(q);
    // free parameters sit at the R-cone interior points
    expect({-1, 1}, P);
    expect({1, 1}, Q);
    expect({0, 1}, P + Q - AffineExpression(Rat(2)));
    expect({-1, 0}, P + AffineExpression(Rat(3)));
    expect({1, 0}, Q + AffineExpression(Rat(3)));
    expect({0, 0}, AffineExpression{});
    // binomial edges: rows (1,2,1), columns (1,2,1), bottom row (1,4,6,4,1)
    expect({-1, 2}, AffineExpression(Rat(1)));
    expect({0, 2}, AffineExpression(Rat(2)));
    expect({1, 2}, AffineExpression(Rat(1)));
    expect({-2, 1}, AffineExpression(Rat(1)));
    expect({-2, 0}, AffineExpression(Rat(2)));
    expect({-2, -1}, AffineExpression(Rat(1)));
    expect({2, 1}, AffineExpression(Rat(1)));
    expect({2, 0}, AffineExpression(Rat(2)));
    expect({2, -1}, AffineExpression(Rat(1)));
    expect({-1, -1}, AffineExpression(Rat(4)));
    expect({0, -1}, AffineExpression(Rat(6)));
    expect({1, -1}, AffineExpression(Rat(4)));
}

TEST_CASE("free parameter count equals the R-cone interior count") {
    for (const FanoPolygon& p : corpus::all()) {
        auto mm = standard_mmlp(p, EdgeMode::BINOMIAL, 2);
        CHECK(static_cast<i64>(mm.f.free_parameters().size()) == r_cone_interior_point_count(p));
    }
}

TEST_CASE("edge modes coincide except at R-internal edge points") {
    // Width-1 rigid cones have no internal edge points, so the two modes
    // agree on these polygons.
    for (const FanoPolygon& p : {corpus::hexagon_two_thirds(), corpus::triangle_fifth(),
                                 corpus::pentagon_before()}) {
        auto a = standard_mmlp(p, EdgeMode::BINOMIAL, 1);
        auto b = standard_mmlp(p, EdgeMode::T_BINOMIAL, 1);
        CHECK(a.f.terms() == b.f.terms());
    }
    // The width-2 rigid edge of this triangle has a midpoint internal to the
    // R-cone; a pure R-edge carries no divisibility requirement, so zeroing
    // it is consistent and only that coefficient changes.
    {
        FanoPolygon sixth = corpus::triangle_sixth();
        auto a = standard_mmlp(sixth, EdgeMode::BINOMIAL, 1);
        auto b = standard_mmlp(sixth, EdgeMode::T_BINOMIAL, 1);
        CHECK(a.f.coeff({3, 0}) == AffineExpression(Rat(2)));
        CHECK(b.f.coeff({3, 0}).is_zero());
        CHECK(a.f.free_parameters().size() == b.f.free_parameters().size());
    }
    // An edge carrying both a T-cone and a width-2 rigid cone: zeroing the
    // rigid-internal edge point contradicts divisibility of the full edge
    // row by the cubed factor, so the T-binomial family is empty while the
    // binomial one carries the expected two parameters.
    FanoPolygon mixed = FanoPolygon::validate({{-1, 4}, {4, -1}, {-1, -1}});
    auto ok = standard_mmlp(mixed, EdgeMode::BINOMIAL, 2);
    CHECK(ok.f.free_parameters().size() == 2);
    CHECK(static_cast<i64>(ok.f.free_parameters().size()) == r_cone_interior_point_count(mixed));
    CHECK_THROWS_AS(standard_mmlp(mixed, EdgeMode::T_BINOMIAL, 2), Error);
}

TEST_CASE("substituted standard MMLPs are depth-1 mutable") {
    for (const FanoPolygon& p :
         {corpus::pentagon_before(), corpus::hexagon_two_thirds(), corpus::triangle_5_third()}) {
        LaurentPolynomial f = corpus::standard_poly(p, 3);
        for (const MutationData& d : available_mutations(p))
            CHECK(is_mutable(f, d.u, LinearFactor{}));
    }
}

TEST_CASE("k_eff") {
    // distinct factors count in full
    FactorAssignment fa = standard_assignment(corpus::p2());
    CHECK(k_eff(corpus::p2(), fa) == 3);
    long v = 2;
    for (auto& [ref, factor] : fa.factors) factor = LinearFactor{Rat(v++), Rat(1)};
    CHECK(k_eff(corpus::p2(), fa) == 3);

    // shared factor on a multi-cone edge collapses to one multiple point
    CHECK(k_eff(corpus::triangle_5_third(), standard_assignment(corpus::triangle_5_third())) == 2);
    CHECK(k_eff(corpus::quad_5_third(), standard_assignment(corpus::quad_5_third())) == 3);
    CHECK(k_eff(corpus::hexagon_two_thirds(), standard_assignment(corpus::hexagon_two_thirds())) ==
          4);
    // a pure R-edge contributes nothing: the printed order-4 triangle has a
    // single T-edge, so the standard assignment leaves one multiple point
    CHECK(k_eff(corpus::printed_triangle_6(), standard_assignment(corpus::printed_triangle_6())) ==
          1);
    // distinct factors on the 6-cone top edge restore k_eff = k
    FactorAssignment spread = standard_assignment(corpus::printed_triangle_6());
    v = 1;
    for (auto& [ref, factor] : spread.factors) factor = LinearFactor{Rat(v++), Rat(1)};
    CHECK(k_eff(corpus::printed_triangle_6(), spread) == 6);
}

TEST_CASE("is_mutable is invariant under simultaneous unimodular maps") {
    std::mt19937 rng(17);
    LaurentPolynomial f = corpus::standard_poly(corpus::hexagon_two_thirds(), 4);
    for (const MutationData& d : available_mutations(corpus::hexagon_two_thirds())) {
        for (int i = 0; i < 4; ++i) {
            UnimodularMap m = corpus::random_unimodular(rng);
            LaurentPolynomial g;
            for (const auto& [e, c] : f.terms()) g.set(m.apply(e), c);
            // normals transform by the inverse transpose
            UnimodularMap mit = m.inverse();
            LatticePoint u2{mit.a * d.u.x + mit.c * d.u.y, mit.b * d.u.x + mit.d * d.u.y};
            CHECK(is_mutable(g, u2, LinearFactor{}) == is_mutable(f, d.u, LinearFactor{}));
        }
    }
}
