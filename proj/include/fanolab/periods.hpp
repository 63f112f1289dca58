#pragma once

// Classical period sequences c_k = const-term(f^k), operator application,
// exact recurrence/operator guessing, and the ramification/degree
// predictions for {n x 1/3(1,1)} baskets.

#include "fanolab/error.hpp"
#include "fanolab/laurent.hpp"
#include "fanolab/polygon.hpp"
#include "fanolab/rational.hpp"

#include <optional>
#include <vector>

namespace fanolab {

struct PeriodSequence {
    std::vector<Rat> coeffs;  // c_0..c_N

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// sum_i p_i(t) nabla^i with nabla = t d/dt; coeffs[i][j] is the t^j
// coefficient of p_i.
struct DifferentialOperator {
    std::vector<std::vector<Rat>> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    int degree() const;

    // Integer-coprime coefficients, positive leading coefficient of the
    // top nabla-power's highest t-term.
    void normalize();

    friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;
};

PeriodSequence period_sequence(const LaurentPolynomial& f, int n);

// Residual coefficients of L applied to sum c_n t^n; exact for indices
// 0..N since the recurrence is lower triangular in the c_n.
PeriodSequence apply_operator(const DifferentialOperator& op, const PeriodSequence& s);

// Minimal (order, then degree) operator annihilating s within the given
// bounds, or nullopt. Requires N >= (max_order+1)(max_degree+1) +
// max_degree + 5.
std::optional<DifferentialOperator> guess_operator(const PeriodSequence& s, int max_order,
                                                   int max_degree);

struct Prediction {
    i64 g = 0;
    i64 rf = 0;
    i64 degree = 0;
    i64 delta = 0;                      // 1 if the beta-shear B != 0, else 2
    i64 trivial_point_lower_bound = 0;  // g^2 + g - 2 + (2g - delta) rf
    i64 k_eff = 0;
    i64 n = 0;  // basket size
};

// Degree/ramification predictions; the formulas are stated only for baskets
// {n x 1/3(1,1)} and the operation refuses anything else.
class OutOfScopeBasket : public Error {
public:
    OutOfScopeBasket(Prediction extrapolated, const std::string& detail)
        : Error(ErrorCode::OUT_OF_SCOPE_BASKET, detail), extrapolated_(extrapolated) {}
    const Prediction& extrapolated() const { return extrapolated_; }

private:
    Prediction extrapolated_;
};

Prediction predict(const FanoPolygon& p);  // standard MMLP factors
Prediction predict(const FanoPolygon& p, const FactorAssignment& assignment);

// rf = 2g(d-1) - delta - sum E_i.
i64 rf_from_formula(i64 g, i64 degree, i64 delta, const std::vector<i64>& eigenspace_dims);

i64 trivial_point_lower_bound(i64 g, i64 rf, i64 delta);

} // namespace fanolab
