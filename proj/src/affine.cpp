#include "fanolab/affine.hpp"

#include "fanolab/error.hpp"

#include <sstream>

namespace fanolab {

AffineExpression& AffineExpression::operator+=(const AffineExpression& o) {
    constant_ += o.constant_;
    for (const auto& [id, c] : o.terms_) {
        Rat& mine = terms_[id];
        mine += c;
        if (mine == 0) terms_.erase(id);
    }
    return *this;
}

AffineExpression& AffineExpression::operator-=(const AffineExpression& o) {
    constant_ -= o.constant_;
    for (const auto& [id, c] : o.terms_) {
        Rat& mine = terms_[id];
        mine -= c;
        if (mine == 0) terms_.erase(id);
    }
    return *this;
}

AffineExpression& AffineExpression::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        constant_ = 0;
        return *this;
    }
    constant_ *= s;
    for (auto& [id, c] : terms_) c *= s;
    return *this;
}

AffineExpression AffineExpression::substituted(ParamId id, const AffineExpression& value) const {
    auto it = terms_.find(id);
    if (it == terms_.end()) return *this;
    AffineExpression out = *this;
    Rat coeff = it->second;
    out.terms_.erase(id);
    out += coeff * value;
    return out;
}

Rat AffineExpression::evaluate(const std::map<ParamId, Rat>& values) const {
    Rat acc = constant_;
    for (const auto& [id, c] : terms_) {
        auto it = values.find(id);
        if (it == values.end())
            throw Error(ErrorCode::INVALID_ARGUMENT, "unbound parameter in evaluate");
        acc += c * it->second;
    }
    return acc;
}

std::string AffineExpression::to_string(const std::vector<std::string>* names) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, c] : terms_) {
        std::string name = names && id < static_cast<int>(names->size())
                               ? (*names)[id]
                               : "p" + std::to_string(id);
        if (first) {
            if (c == 1) os << name;
            else if (c == -1) os << "-" << name;
            else os << rational_to_string(c) << "*" << name;
            first = false;
        } else {
            if (c > 0) os << "+";
            if (c == 1) os << name;
            else if (c == -1) os << "-" << name;
            else os << rational_to_string(c) << "*" << name;
        }
    }
    if (first) return rational_to_string(constant_);
    if (constant_ != 0) {
        if (constant_ > 0) os << "+";
        os << rational_to_string(constant_);
    }
    return os.str();
}

AffineExpression SolutionSpace::reduce(const AffineExpression& e) const {
    AffineExpression out = e;
    for (const auto& [id, c] : e.terms()) {
        auto it = assignments.find(id);
        if (it != assignments.end())
            out = out.substituted(id, it->second);
    }
    return out;
}

bool LinearSolver::add_equation(const AffineExpression& eq) {
    if (!consistent_) return false;
    AffineExpression r = space_.reduce(eq);
    if (r.is_constant()) {
        if (r.constant() != 0) {
            consistent_ = false;
            space_.consistent = false;
            return false;
        }
        return true;
    }
    // Pivot on the lowest parameter id present.
    ParamId pivot = r.terms().begin()->first;
    Rat coeff = r.terms().begin()->second;
    AffineExpression rhs = r;
    rhs -= coeff * AffineExpression::parameter(pivot);
    rhs *= Rat(-1) / coeff;
    // rhs now expresses pivot over the other parameters of r.
    for (auto& [id, expr] : space_.assignments)
        expr = expr.substituted(pivot, rhs);
    space_.assignments[pivot] = rhs;
    ++rank_;
    return true;
}

bool LinearSolver::add_equations(const std::vector<AffineExpression>& eqs) {
    for (const auto& e : eqs)
        if (!add_equation(e)) return false;
    return consistent_;
}

SolutionSpace solve_linear_system(const std::vector<AffineExpression>& equations) {
    LinearSolver solver;
    solver.add_equations(equations);
    return solver.solution();
}

} // namespace fanolab
