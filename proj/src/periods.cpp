#include "fanolab/periods.hpp"

#include "fanolab/cones.hpp"
#include "fanolab/error.hpp"
#include "fanolab/genus.hpp"
#include "fanolab/monodromy.hpp"

#include <algorithm>

namespace fanolab {

int DifferentialOperator::degree() const {
    int deg = 0;
    for (const auto& p : coeffs)
        for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j)
            if (p[static_cast<size_t>(j)] != 0) {
                deg = std::max(deg, j);
                break;
            }
    return deg;
}

void DifferentialOperator::normalize() {
    if (coeffs.empty()) return;
    // common denominator, then divide by the content
    Int lcm_den(1);
    for (const auto& p : coeffs)
        for (const Rat& c : p)
            if (c != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    Int content(0);
    for (auto& p : coeffs)
        for (Rat& c : p) {
            c *= Rat(lcm_den);
            c.canonicalize();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
        }
    if (content == 0) return;
    for (auto& p : coeffs)
        for (Rat& c : p) {
            c /= Rat(content);
            c.canonicalize();
        }
    // positive leading coefficient of the top order's highest t-power
    const auto& top = coeffs.back();
    for (int j = static_cast<int>(top.size()) - 1; j >= 0; --j) {
        if (top[static_cast<size_t>(j)] == 0) continue;
        if (top[static_cast<size_t>(j)] < 0)
            for (auto& p : coeffs)
                for (Rat& c : p) c = -c;
        break;
    }
    for (auto& p : coeffs) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
}

PeriodSequence period_sequence(const LaurentPolynomial& f, int n) {
    if (n < 0)
        throw Error(ErrorCode::INVALID_ARGUMENT, "period_sequence needs N >= 0");
    PeriodSequence s;
    s.coeffs.assign(static_cast<size_t>(n + 1), Rat(0));
    s.coeffs[0] = 1;
    if (n == 0 || f.is_zero()) return s;

    // Half-plane data of Newt(f); exponents that can still cancel within the
    // remaining k multiplications satisfy <u|e> <= h * k for every edge.
    FanoPolygon newt = newton_polygon(f);
    std::vector<Edge> edges = newt.edges();

    std::map<LatticePoint, Rat> acc;
    acc[{0, 0}] = 1;
    for (int k = 1; k <= n; ++k) {
        std::map<LatticePoint, Rat> next;
        const i64 remaining = n - k;
        for (const auto& [e1, c1] : acc) {
            for (const auto& [e2, c2] : f.terms()) {
                LatticePoint e = e1 + e2;
                bool reachable = true;
                for (const Edge& ed : edges)
                    if (dot(ed.inward_normal, e) > ed.height * remaining) {
                        reachable = false;
                        break;
                    }
                if (!reachable) continue;
                Rat& v = next[e];
                v += c1 * c2;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
        auto it0 = next.find({0, 0});
        s.coeffs[static_cast<size_t>(k)] = it0 == next.end() ? Rat(0) : it0->second;
        acc = std::move(next);
    }
    return s;
}

PeriodSequence apply_operator(const DifferentialOperator& op, const PeriodSequence& s) {
    const int n = s.order();
    PeriodSequence out;
    out.coeffs.assign(static_cast<size_t>(n + 1), Rat(0));
    for (int m = 0; m <= n; ++m) {
        Rat acc(0);
        for (int i = 0; i < static_cast<int>(op.coeffs.size()); ++i) {
            const auto& p = op.coeffs[static_cast<size_t>(i)];
            for (int j = 0; j < static_cast<int>(p.size()); ++j) {
                if (j > m || p[static_cast<size_t>(j)] == 0) continue;
                // p_{i,j} t^j nabla^i picks up (m-j)^i c_{m-j}
                Rat term = p[static_cast<size_t>(j)] * s.coeffs[static_cast<size_t>(m - j)];
                for (int q = 0; q < i; ++q) term *= Rat(m - j);
                acc += term;
            }
        }
        out.coeffs[static_cast<size_t>(m)] = acc;
    }
    return out;
}

namespace {

// Nullspace vector of the residual system for (order, degree) bounds, or
// empty. Unknowns x_{i,j} indexed i*(degree+1)+j; equations m = 0..N.
std::optional<std::vector<Rat>> recurrence_nullspace(const PeriodSequence& s, int order, int degree) {
    const int n = s.order();
    const int unknowns = (order + 1) * (degree + 1);
    std::vector<std::vector<Rat>> rows;
    for (int m = 0; m <= n; ++m) {
        std::vector<Rat> row(static_cast<size_t>(unknowns), Rat(0));
        bool nonzero = false;
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= degree; ++j) {
                if (j > m) continue;
                Rat v = s.coeffs[static_cast<size_t>(m - j)];
                for (int q = 0; q < i; ++q) v *= Rat(m - j);
                if (v != 0) nonzero = true;
                row[static_cast<size_t>(i * (degree + 1) + j)] = v;
            }
        if (nonzero) rows.push_back(std::move(row));
    }
    // RREF
    int rank = 0;
    std::vector<int> pivot_of_col(static_cast<size_t>(unknowns), -1);
    for (int col = 0; col < unknowns && rank < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<size_t>(sel)], rows[static_cast<size_t>(rank)]);
        Rat inv = Rat(1) / rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int j = col; j < unknowns; ++j) rows[static_cast<size_t>(rank)][static_cast<size_t>(j)] *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            Rat f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < unknowns; ++j)
                rows[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        pivot_of_col[static_cast<size_t>(col)] = rank;
        ++rank;
    }
    if (rank >= unknowns) return std::nullopt;
    // First free column -> kernel vector.
    int free_col = -1;
    for (int col = 0; col < unknowns; ++col)
        if (pivot_of_col[static_cast<size_t>(col)] < 0) {
            free_col = col;
            break;
        }
    std::vector<Rat> x(static_cast<size_t>(unknowns), Rat(0));
    x[static_cast<size_t>(free_col)] = 1;
    for (int col = 0; col < unknowns; ++col) {
        int pr = pivot_of_col[static_cast<size_t>(col)];
        if (pr < 0) continue;
        x[static_cast<size_t>(col)] = -rows[static_cast<size_t>(pr)][static_cast<size_t>(free_col)];
    }
    return x;
}

bool residual_vanishes(const DifferentialOperator& op, const PeriodSequence& s) {
    PeriodSequence r = apply_operator(op, s);
    for (const Rat& v : r.coeffs)
        if (v != 0) return false;
    return true;
}

} // namespace

std::optional<DifferentialOperator> guess_operator(const PeriodSequence& s, int max_order,
                                                   int max_degree) {
    const int need = (max_order + 1) * (max_degree + 1) + max_degree + 5;
    if (s.order() < need)
        throw Error(ErrorCode::INVALID_ARGUMENT,
                    "sequence too short: need N >= " + std::to_string(need));
    for (int order = 1; order <= max_order; ++order) {
        for (int degree = 0; degree <= max_degree; ++degree) {
            auto x = recurrence_nullspace(s, order, degree);
            if (!x) continue;
            DifferentialOperator op;
            op.coeffs.assign(static_cast<size_t>(order + 1),
                             std::vector<Rat>(static_cast<size_t>(degree + 1), Rat(0)));
            for (int i = 0; i <= order; ++i)
                for (int j = 0; j <= degree; ++j)
                    op.coeffs[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        (*x)[static_cast<size_t>(i * (degree + 1) + j)];
            // leading nabla-coefficient must be present, otherwise a
            // lower-order pass would already have found it
            bool top_zero = true;
            for (const Rat& c : op.coeffs.back())
                if (c != 0) top_zero = false;
            if (top_zero) continue;
            if (!residual_vanishes(op, s)) continue;
            op.normalize();
            return op;
        }
    }
    return std::nullopt;
}

i64 rf_from_formula(i64 g, i64 degree, i64 delta, const std::vector<i64>& eigenspace_dims) {
    i64 sum = 0;
    for (i64 e : eigenspace_dims) sum += e;
    return 2 * g * (degree - 1) - delta - sum;
}

i64 trivial_point_lower_bound(i64 g, i64 rf, i64 delta) {
    return g * g + g - 2 + (2 * g - delta) * rf;
}

Prediction predict(const FanoPolygon& p) {
    return predict(p, standard_assignment(p));
}

Prediction predict(const FanoPolygon& p, const FactorAssignment& assignment) {
    SingularityContent content = singularity_content(p);
    Prediction out;
    out.n = static_cast<i64>(content.basket.size());
    out.g = mutable_genus(p);
    out.k_eff = k_eff(p, assignment);
    out.rf = out.n + out.k_eff - 3;
    out.degree = out.g * out.g + 3 * out.g - 1 + 2 * out.g * out.rf;
    MonodromyMatrix m = assemble_monodromy(p);
    Rat b = m.entry(1, 0);
    out.delta = (b != 0) ? 1 : 2;
    out.trivial_point_lower_bound = trivial_point_lower_bound(out.g, out.rf, out.delta);
    for (const RConeData& rc : content.basket)
        if (!(rc.r == 3 && rc.a == 1))
            throw OutOfScopeBasket(out, "degree/ramification formulas require a {n x 1/3(1,1)} basket");
    return out;
}

} // namespace fanolab
