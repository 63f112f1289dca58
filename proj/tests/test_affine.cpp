#include "fanolab/affine.hpp"

#include <doctest.h>

#include <random>

using namespace fanolab;

namespace {

AffineExpression var(int id) { return AffineExpression::parameter(id); }
AffineExpression c(long v) { return AffineExpression(Rat(v)); }

} // namespace

TEST_CASE("solve_linear_system examples") {
    // {p - q, q - 3} -> {p -> 3, q -> 3}
    auto s = solve_linear_system({var(0) - var(1), var(1) - c(3)});
    REQUIRE(s.consistent);
    CHECK(s.assignments.at(0) == c(3));
    CHECK(s.assignments.at(1) == c(3));

    // {p + q - 2, p - q} -> {p -> 1, q -> 1}
    s = solve_linear_system({var(0) + var(1) - c(2), var(0) - var(1)});
    REQUIRE(s.consistent);
    CHECK(s.assignments.at(0) == c(1));
    CHECK(s.assignments.at(1) == c(1));

    // {p - 1, p - 2} -> INCONSISTENT
    s = solve_linear_system({var(0) - c(1), var(0) - c(2)});
    CHECK_FALSE(s.consistent);
}

TEST_CASE("pivots prefer the lowest parameter id") {
    auto s = solve_linear_system({var(0) + var(2) - c(5)});
    REQUIRE(s.consistent);
    CHECK(s.assignments.count(0) == 1);
    CHECK(s.assignments.count(2) == 0);  // stays free
}

TEST_CASE("back-substitution annihilates every input equation") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int round = 0; round < 50; ++round) {
        std::vector<AffineExpression> eqs;
        int nvars = 5;
        int neqs = 1 + round % 5;
        for (int e = 0; e < neqs; ++e) {
            AffineExpression expr(Rat(coeff(rng)));
            for (int v = 0; v < nvars; ++v) {
                int cf = coeff(rng);
                if (cf != 0) expr += Rat(cf) * var(v);
            }
            eqs.push_back(expr);
        }
        auto s = solve_linear_system(eqs);
        if (!s.consistent) continue;
        for (const auto& e : eqs)
            CHECK(s.reduce(e).is_zero());
    }
}

TEST_CASE("substitution and evaluation") {
    AffineExpression e = Rat(2) * var(0) + Rat(3) * var(1) - c(7);
    AffineExpression sub = e.substituted(0, var(1) + c(1));
    CHECK(sub == Rat(5) * var(1) - c(5));
    std::map<ParamId, Rat> values{{0, Rat(2)}, {1, Rat(1)}};
    CHECK(e.evaluate(values) == Rat(0));
    CHECK(e.to_string() == "2*p0+3*p1-7");
}
