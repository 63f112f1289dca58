#pragma once

// Affine-linear expressions in named parameters over Q, and exact Gaussian
// elimination on systems of them. These carry the symbolic coefficients of
// maximally-mutable polynomial families.

#include "fanolab/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fanolab {

using ParamId = int;

class AffineExpression {
public:
    AffineExpression() = default;
    explicit AffineExpression(Rat constant) : constant_(std::move(constant)) {}

    static AffineExpression parameter(ParamId id) {
        AffineExpression e;
        e.terms_[id] = Rat(1);
        return e;
    }

    const Rat& constant() const { return constant_; }
    const std::map<ParamId, Rat>& terms() const { return terms_; }

    bool is_constant() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty() && constant_ == 0; }

    Rat coefficient(ParamId id) const {
        auto it = terms_.find(id);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    AffineExpression& operator+=(const AffineExpression& o);
    AffineExpression& operator-=(const AffineExpression& o);
    AffineExpression& operator*=(const Rat& s);

    friend AffineExpression operator+(AffineExpression a, const AffineExpression& b) { return a += b; }
    friend AffineExpression operator-(AffineExpression a, const AffineExpression& b) { return a -= b; }
    friend AffineExpression operator*(AffineExpression a, const Rat& s) { return a *= s; }
    friend AffineExpression operator*(const Rat& s, AffineExpression a) { return a *= s; }

    friend bool operator==(const AffineExpression&, const AffineExpression&) = default;

    // Replace one parameter by an expression.
    AffineExpression substituted(ParamId id, const AffineExpression& value) const;

    // Evaluate with every parameter bound; missing parameters error.
    Rat evaluate(const std::map<ParamId, Rat>& values) const;

    std::string to_string(const std::vector<std::string>* names = nullptr) const;

private:
    Rat constant_ = Rat(0);
    std::map<ParamId, Rat> terms_;  // no zero coefficients stored
};

// Result of solving {e_i = 0}: either INCONSISTENT or a substitution map
// pinned-parameter -> expression over the remaining free parameters.
struct SolutionSpace {
    bool consistent = true;
    std::map<ParamId, AffineExpression> assignments;

    AffineExpression reduce(const AffineExpression& e) const;
};

SolutionSpace solve_linear_system(const std::vector<AffineExpression>& equations);

// Incremental variant used by the MMLP closure loop: feeds equations one at
// a time into an eliminated system, lowest parameter id chosen as pivot.
class LinearSolver {
public:
    // Returns false once the system is inconsistent.
    bool add_equation(const AffineExpression& eq);
    bool add_equations(const std::vector<AffineExpression>& eqs);

    bool consistent() const { return consistent_; }
    // Number of equations that changed the solution space.
    int rank() const { return rank_; }

    const SolutionSpace& solution() const { return space_; }
    AffineExpression reduce(const AffineExpression& e) const { return space_.reduce(e); }

private:
    SolutionSpace space_;
    bool consistent_ = true;
    int rank_ = 0;
};

} // namespace fanolab
