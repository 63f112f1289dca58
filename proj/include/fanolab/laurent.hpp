#pragma once

// Laurent polynomials with rational or affine-symbolic coefficients: Newton
// polygons, slices, mutability tests, cluster-transformation mutation, and
// standard maximally-mutable synthesis over the mutation graph.

#include "fanolab/affine.hpp"
#include "fanolab/lattice.hpp"
#include "fanolab/mutation.hpp"
#include "fanolab/polygon.hpp"
#include "fanolab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace fanolab {

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    void set(const LatticePoint& e, Rat c) {
        if (c == 0) terms_.erase(e);
        else terms_[e] = std::move(c);
    }
    void add(const LatticePoint& e, const Rat& c) {
        Rat& v = terms_[e];
        v += c;
        if (v == 0) terms_.erase(e);
    }
    Rat coeff(const LatticePoint& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const std::map<LatticePoint, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPolynomial operator*(const LaurentPolynomial& o) const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::map<LatticePoint, Rat> terms_;
};

class SymbolicLaurentPolynomial {
public:
    void set(const LatticePoint& e, AffineExpression c) {
        if (c.is_zero()) terms_.erase(e);
        else terms_[e] = std::move(c);
    }
    AffineExpression coeff(const LatticePoint& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? AffineExpression{} : it->second;
    }
    const std::map<LatticePoint, AffineExpression>& terms() const { return terms_; }

    std::vector<std::string> parameter_names;  // index = ParamId

    LaurentPolynomial substitute(const std::map<ParamId, Rat>& values) const;
    SymbolicLaurentPolynomial reduced(const SolutionSpace& space) const;
    std::vector<ParamId> free_parameters() const;

private:
    std::map<LatticePoint, AffineExpression> terms_;
};

// Convex hull of the support, validated Fano; error NOT_FANO otherwise.
FanoPolygon newton_polygon(const LaurentPolynomial& f);

// Slice of f at height rho with respect to u, written in the coordinate
// along the given factor direction fdir (exponent e contributes at the
// t with e = rho*z + t*fdir). Key: t, value: coefficient.
std::map<i64, Rat> slice(const LaurentPolynomial& f, const LatticePoint& u, i64 rho,
                         const LatticePoint& fdir);
// Canonical fdir = (-u.y, u.x).
std::map<i64, Rat> slice(const LaurentPolynomial& f, const LatticePoint& u, i64 rho);

struct LinearFactor {
    Rat gamma{1};
    Rat eta{1};
};

// True iff (gamma + eta X)^|rho| divides the slice at every height rho on
// the contracted side (rho = -1 .. -h for the edge selected by u).
bool is_mutable(const LaurentPolynomial& f, const LatticePoint& u, const LinearFactor& factor);

// Cluster transformation x^e -> x^e (gamma + eta x^F)^{<u|e>}; requires the
// divisibility on the contracted side (error NOT_MUTABLE).
LaurentPolynomial mutate_laurent(const LaurentPolynomial& f, const LatticePoint& u,
                                 const LinearFactor& factor, const LatticePoint& fdir);

enum class EdgeMode { BINOMIAL, T_BINOMIAL };

struct MmlpResult {
    SymbolicLaurentPolynomial f;
    bool stabilized = false;
    int depth_reached = 0;
    int nodes_visited = 0;
};

// Standard maximally-mutable family on P: zero constant term, binomial edge
// coefficients with factor (1 + x^F), divisibility constraints accumulated
// over the mutation graph to closure_depth. Error INCONSISTENT if no
// polynomial satisfies the constraints.
MmlpResult standard_mmlp(const FanoPolygon& p, EdgeMode mode = EdgeMode::BINOMIAL,
                         int closure_depth = 3, int max_nodes = 10000);

// Per-T-cone linear factors; cone keys are (edge index, T-cone index within
// the edge decomposition).
struct TConeRef {
    int edge = 0;
    int cone = 0;
    friend auto operator<=>(const TConeRef&, const TConeRef&) = default;
};

struct FactorAssignment {
    std::map<TConeRef, LinearFactor> factors;
};

FactorAssignment standard_assignment(const FanoPolygon& p);  // all (1 + x)

// k_total minus, per edge, (#T-cones - #distinct factors on that edge).
i64 k_eff(const FanoPolygon& p, const FactorAssignment& assignment);

} // namespace fanolab
