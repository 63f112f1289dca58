#include "fanolab/json_io.hpp"

#include "fanolab/error.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace fanolab;

TEST_CASE("polygon JSON round trip") {
    for (const FanoPolygon& p : corpus::all()) {
        CHECK(polygon_from_json(polygon_to_json(p)) == p);
        // normal-form output re-input is a fixed point
        FanoPolygon nf = p.normal_form();
        CHECK(polygon_from_json(polygon_to_json(nf)).normal_form() == nf);
    }
    CHECK_THROWS_AS(polygon_from_json(Json{{"vertices", "nope"}}), Error);
}

TEST_CASE("rational strings stay exact") {
    CHECK(parse_rational("22/8") == make_rat(11, 4));
    CHECK(parse_rational("-5") == Rat(-5));
    CHECK(rational_to_string(make_rat(-10, 4)) == "-5/2");
    CHECK(rational_to_string(Rat(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("laurent and sequence round trips") {
    LaurentPolynomial f = corpus::standard_poly(corpus::hexagon_two_thirds(), 3);
    CHECK(laurent_from_json(laurent_to_json(f)) == f);
    PeriodSequence s = period_sequence(f, 10);
    PeriodSequence s2 = sequence_from_json(sequence_to_json(s));
    CHECK(s.coeffs == s2.coeffs);
}

TEST_CASE("matrix and content round trips") {
    for (const FanoPolygon& p :
         {corpus::pentagon_before(), corpus::triangle_fifth_12(), corpus::triangle_all_rigid()}) {
        MonodromyMatrix m = assemble_monodromy(p);
        MonodromyMatrix m2 = matrix_from_json(matrix_to_json(m));
        CHECK(m.cols == m2.cols);
        CHECK(m.basis == m2.basis);
        SingularityContent c = singularity_content(p);
        CHECK(content_from_json(content_to_json(c)) == c);
    }
}

TEST_CASE("operator round trip") {
    DifferentialOperator op;
    op.coeffs = {{Rat(0), Rat(0), Rat(0), Rat(54)},
                 {Rat(0), Rat(0), Rat(0), Rat(81)},
                 {Rat(-1), Rat(0), Rat(0), Rat(27)}};
    DifferentialOperator op2 = operator_from_json(operator_to_json(op));
    CHECK(op == op2);
}

TEST_CASE("symbolic serialization names free parameters") {
    auto mm = standard_mmlp(corpus::hexagon_two_thirds());
    Json j = symbolic_to_json(mm.f);
    REQUIRE(j["params"].size() == 2);
    CHECK(j["params"][0] == "a(-1,1)");
    CHECK(j["params"][1] == "a(1,1)");
}
