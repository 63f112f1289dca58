#include "fanolab/laurent.hpp"

#include "fanolab/cones.hpp"
#include "fanolab/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fanolab {

namespace {

template <class K>
bool coeff_is_zero(const K& k);
template <>
bool coeff_is_zero<Rat>(const Rat& k) { return k == 0; }
template <>
bool coeff_is_zero<AffineExpression>(const AffineExpression& k) { return k.is_zero(); }

// Slice at height rho in the t-coordinate e = rho*z + t*fdir.
template <class K>
std::map<i64, K> slice_generic(const std::map<LatticePoint, K>& terms, const LatticePoint& u,
                               i64 rho, const LatticePoint& fdir, const LatticePoint& z) {
    const i64 scale = cross(u, fdir);
    const i64 zc = cross(u, z);
    std::map<i64, K> out;
    for (const auto& [e, c] : terms) {
        if (dot(u, e) != rho) continue;
        i64 num = cross(u, e) - zc * rho;
        if (num % scale != 0)
            throw Error(ErrorCode::INVALID_DATA, "slice coordinate not integral (fdir not primitive?)");
        out[num / scale] = c;
    }
    return out;
}

// One synthetic division by (gamma + eta X); returns remainder, quotient in place.
template <class K>
K divide_binomial_once(std::map<i64, K>& dense, const Rat& gamma, const Rat& eta) {
    if (dense.empty()) return K{};
    const i64 lo = dense.begin()->first;
    const i64 hi = dense.rbegin()->first;
    std::vector<K> a(static_cast<size_t>(hi - lo + 1));
    for (auto& [t, c] : dense) a[static_cast<size_t>(t - lo)] = c;
    const Rat inv_eta = Rat(1) / eta;
    std::vector<K> q(a.size() > 1 ? a.size() - 1 : 0);
    for (size_t i = a.size(); i-- > 1;) {
        K qi = a[i] * inv_eta;
        a[i - 1] -= qi * gamma;
        q[i - 1] = qi;
    }
    K rem = a[0];
    dense.clear();
    for (size_t i = 0; i < q.size(); ++i)
        if (!coeff_is_zero(q[i])) dense[lo + static_cast<i64>(i)] = q[i];
    return rem;
}

template <class K>
void multiply_binomial_once(std::map<i64, K>& dense, const Rat& gamma, const Rat& eta) {
    std::map<i64, K> out;
    for (const auto& [t, c] : dense) {
        {
            K& v = out[t];
            v += c * gamma;
            if (coeff_is_zero(v)) out.erase(t);
        }
        {
            K& v = out[t + 1];
            v += c * eta;
            if (coeff_is_zero(v)) out.erase(t + 1);
        }
    }
    dense = std::move(out);
}

// Cluster transformation; fills `remainders` with every division remainder
// (all must vanish for the transformation to land in Laurent polynomials).
template <class K>
std::map<LatticePoint, K> mutate_generic(const std::map<LatticePoint, K>& terms,
                                         const LatticePoint& u, const LinearFactor& factor,
                                         const LatticePoint& fdir, std::vector<K>& remainders) {
    if (!is_primitive(u) || !is_primitive(fdir) || dot(u, fdir) != 0)
        throw Error(ErrorCode::INVALID_DATA, "mutation data needs primitive u, fdir with <u|fdir> = 0");
    if (factor.gamma == 0 || factor.eta == 0)
        throw Error(ErrorCode::INVALID_DATA, "degenerate linear factor");
    const LatticePoint z = dual_unit(u);
    std::set<i64> heights;
    for (const auto& [e, c] : terms) heights.insert(dot(u, e));
    std::map<LatticePoint, K> out;
    for (i64 rho : heights) {
        std::map<i64, K> s = slice_generic(terms, u, rho, fdir, z);
        if (rho < 0) {
            for (i64 j = 0; j < -rho; ++j)
                remainders.push_back(divide_binomial_once(s, factor.gamma, factor.eta));
        } else {
            for (i64 j = 0; j < rho; ++j)
                multiply_binomial_once(s, factor.gamma, factor.eta);
        }
        for (const auto& [t, c] : s) {
            if (coeff_is_zero(c)) continue;
            LatticePoint e = LatticePoint{z.x * rho, z.y * rho} + fdir * t;
            K& v = out[e];
            v += c;
            if (coeff_is_zero(v)) out.erase(e);
        }
    }
    return out;
}

Int binomial(i64 n, i64 k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

} // namespace

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add(e1 + e2, c1 * c2);
    return out;
}

LaurentPolynomial SymbolicLaurentPolynomial::substitute(const std::map<ParamId, Rat>& values) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.set(e, c.evaluate(values));
    return out;
}

SymbolicLaurentPolynomial SymbolicLaurentPolynomial::reduced(const SolutionSpace& space) const {
    SymbolicLaurentPolynomial out;
    out.parameter_names = parameter_names;
    for (const auto& [e, c] : terms_) out.set(e, space.reduce(c));
    return out;
}

std::vector<ParamId> SymbolicLaurentPolynomial::free_parameters() const {
    std::set<ParamId> ids;
    for (const auto& [e, c] : terms_)
        for (const auto& [id, coeff] : c.terms()) ids.insert(id);
    return {ids.begin(), ids.end()};
}

FanoPolygon newton_polygon(const LaurentPolynomial& f) {
    if (f.is_zero())
        throw Error(ErrorCode::NOT_FANO, "zero polynomial has no Newton polygon");
    std::vector<LatticePoint> support;
    for (const auto& [e, c] : f.terms()) support.push_back(e);
    try {
        return FanoPolygon::validate(convex_hull_ccw(std::move(support)));
    } catch (const Error& err) {
        throw Error(ErrorCode::NOT_FANO, err.what());
    }
}

std::map<i64, Rat> slice(const LaurentPolynomial& f, const LatticePoint& u, i64 rho,
                         const LatticePoint& fdir) {
    if (!is_primitive(u) || !is_primitive(fdir) || dot(u, fdir) != 0)
        throw Error(ErrorCode::INVALID_DATA, "slice needs primitive u, fdir with <u|fdir> = 0");
    return slice_generic(f.terms(), u, rho, fdir, dual_unit(u));
}

std::map<i64, Rat> slice(const LaurentPolynomial& f, const LatticePoint& u, i64 rho) {
    return slice(f, u, rho, LatticePoint{-u.y, u.x});
}

bool is_mutable(const LaurentPolynomial& f, const LatticePoint& u, const LinearFactor& factor) {
    if (f.is_zero()) return false;
    i64 rho_min = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        i64 rho = dot(u, e);
        if (first || rho < rho_min) rho_min = rho, first = false;
    }
    if (rho_min >= 0) return false;
    const LatticePoint fdir{-u.y, u.x};
    const LatticePoint z = dual_unit(u);
    for (i64 rho = -1; rho >= rho_min; --rho) {
        std::map<i64, Rat> s = slice_generic(f.terms(), u, rho, fdir, z);
        for (i64 j = 0; j < -rho; ++j) {
            Rat rem = divide_binomial_once(s, factor.gamma, factor.eta);
            if (rem != 0) return false;
        }
    }
    return true;
}

LaurentPolynomial mutate_laurent(const LaurentPolynomial& f, const LatticePoint& u,
                                 const LinearFactor& factor, const LatticePoint& fdir) {
    std::vector<Rat> remainders;
    auto terms = mutate_generic(f.terms(), u, factor, fdir, remainders);
    for (const Rat& r : remainders)
        if (r != 0)
            throw Error(ErrorCode::NOT_MUTABLE, "slice not divisible by the factor power");
    LaurentPolynomial out;
    for (auto& [e, c] : terms) out.set(e, c);
    return out;
}

namespace {

struct MmlpInstance {
    std::vector<LatticePoint> vertices;
    std::map<LatticePoint, AffineExpression> terms;
};

std::string instance_key(const MmlpInstance& inst) {
    std::ostringstream os;
    for (const auto& v : inst.vertices) os << v.x << "," << v.y << ";";
    os << "|";
    for (const auto& [e, c] : inst.terms) os << e.x << "," << e.y << "=" << c.to_string() << ";";
    return os.str();
}

// Division remainders required to vanish for every T-edge of `poly`, at all
// heights 1..h below the edge; also produces the transported children.
void node_constraints_and_children(const FanoPolygon& poly,
                                   const std::map<LatticePoint, AffineExpression>& terms,
                                   std::vector<AffineExpression>& constraints,
                                   std::vector<MmlpInstance>* children) {
    for (const MutationData& d : available_mutations(poly)) {
        std::vector<AffineExpression> rems;
        auto mutated = mutate_generic(terms, d.u, LinearFactor{Rat(1), Rat(1)}, d.f, rems);
        for (auto& r : rems)
            if (!r.is_zero()) constraints.push_back(r);
        if (children) {
            MutationResult res = mutate_polygon(poly, d);
            MmlpInstance child;
            child.vertices = res.raw_vertices;
            child.terms = std::move(mutated);
            children->push_back(std::move(child));
        }
    }
}

} // namespace

MmlpResult standard_mmlp(const FanoPolygon& p, EdgeMode mode, int closure_depth, int max_nodes) {
    MmlpResult result;
    SymbolicLaurentPolynomial& f = result.f;

    // Fixed boundary coefficients: binomial along each edge, optionally
    // zeroed at edge points internal to an R-cone.
    std::map<LatticePoint, Rat> fixed;
    for (const Edge& e : p.edges()) {
        const LatticePoint step = primitive_part(e.head - e.tail).first;
        EdgeDecomposition dec = decompose_edge(e);
        for (i64 j = 0; j <= e.width; ++j) {
            LatticePoint pt = e.tail + step * j;
            Rat c(binomial(e.width, j));
            if (mode == EdgeMode::T_BINOMIAL && dec.r_cone_span && j > 0 &&
                j < (e.width % e.height))
                c = Rat(0);  // strictly inside the (leftmost) R-cone span
            fixed[pt] = c;
        }
    }

    // Parameters: non-R-interior interior points first (they are the ones
    // the solver eliminates), R-cone interior points last.
    std::vector<LatticePoint> r_int = r_cone_interior_points(p);
    std::set<LatticePoint> r_int_set(r_int.begin(), r_int.end());
    std::vector<LatticePoint> tier1, tier2;
    for (const LatticePoint& q : p.interior_lattice_points()) {
        if (is_zero(q)) continue;
        (r_int_set.count(q) ? tier2 : tier1).push_back(q);
    }
    std::map<LatticePoint, ParamId> ids;
    auto name_of = [](const LatticePoint& q) {
        return "a(" + std::to_string(q.x) + "," + std::to_string(q.y) + ")";
    };
    for (const LatticePoint& q : tier1) {
        ParamId id = static_cast<ParamId>(f.parameter_names.size());
        ids[q] = id;
        f.parameter_names.push_back(name_of(q));
    }
    for (const LatticePoint& q : tier2) {
        ParamId id = static_cast<ParamId>(f.parameter_names.size());
        ids[q] = id;
        f.parameter_names.push_back(name_of(q));
    }

    for (const auto& [pt, c] : fixed)
        f.set(pt, AffineExpression(c));
    for (const auto& [pt, id] : ids)
        f.set(pt, AffineExpression::parameter(id));
    // origin coefficient is zero: simply absent

    // Transport the family breadth-first over the mutation graph, layer by
    // layer, feeding every division remainder into the solver. Exploration
    // stops at closure_depth, at max_nodes, or as soon as a whole layer
    // leaves the constraint space unchanged (that layer is the reported
    // stabilization witness).
    LinearSolver solver;
    std::set<std::string> seen;
    int visited = 0;
    std::vector<MmlpInstance> layer;
    {
        MmlpInstance root;
        root.vertices = p.vertices();
        for (const auto& [e, c] : f.terms()) root.terms[e] = c;
        layer.push_back(std::move(root));
        seen.insert(instance_key(layer[0]));
    }
    bool capped = false;
    for (int depth = 0; depth <= closure_depth; ++depth) {
        int rank_before = solver.rank();
        std::vector<MmlpInstance> next;
        for (const MmlpInstance& inst : layer) {
            if (++visited > max_nodes) {
                capped = true;
                break;
            }
            FanoPolygon poly = FanoPolygon::validate(inst.vertices);
            std::vector<AffineExpression> eqs;
            std::vector<MmlpInstance> children;
            bool expand = depth < closure_depth;
            node_constraints_and_children(poly, inst.terms, eqs, expand ? &children : nullptr);
            if (!solver.add_equations(eqs))
                throw Error(ErrorCode::INCONSISTENT,
                            "no polynomial satisfies the mutability constraints");
            for (auto& ch : children) {
                std::string key = instance_key(ch);
                if (seen.count(key)) continue;
                seen.insert(key);
                next.push_back(std::move(ch));
            }
        }
        result.depth_reached = depth;
        if (depth >= 1 && solver.rank() == rank_before && !capped) {
            result.stabilized = true;
            break;
        }
        if (next.empty() && !capped) {
            result.stabilized = true;  // frontier exhausted
            break;
        }
        if (capped) break;
        layer = std::move(next);
    }
    result.nodes_visited = visited;
    result.f = result.f.reduced(solver.solution());
    result.f.parameter_names = f.parameter_names;
    return result;
}

FactorAssignment standard_assignment(const FanoPolygon& p) {
    FactorAssignment fa;
    auto es = p.edges();
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        EdgeDecomposition d = decompose_edge(es[i]);
        for (int j = 0; j < static_cast<int>(d.t_cone_spans.size()); ++j)
            fa.factors[{i, j}] = LinearFactor{Rat(1), Rat(1)};
    }
    return fa;
}

i64 k_eff(const FanoPolygon& p, const FactorAssignment& assignment) {
    auto es = p.edges();
    i64 total = 0;
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        EdgeDecomposition d = decompose_edge(es[i]);
        std::set<Rat> roots;
        for (int j = 0; j < static_cast<int>(d.t_cone_spans.size()); ++j) {
            auto it = assignment.factors.find({i, j});
            if (it == assignment.factors.end())
                throw Error(ErrorCode::INVALID_ARGUMENT, "assignment does not cover every T-cone");
            if (it->second.gamma == 0 || it->second.eta == 0)
                throw Error(ErrorCode::INVALID_ARGUMENT, "degenerate factor in assignment");
            roots.insert(it->second.gamma / it->second.eta);
        }
        total += static_cast<i64>(roots.size());
    }
    return total;
}

} // namespace fanolab
