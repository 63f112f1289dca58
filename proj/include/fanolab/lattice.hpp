#pragma once

// Rank-2 lattice primitives: points of N (also used for dual vectors in M
// and exponent vectors of Laurent monomials), unimodular maps, primitive
// parts and the cyclic-quotient type of a cone.

#include "fanolab/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace fanolab {

using i64 = std::int64_t;

struct LatticePoint {
    i64 x = 0;
    i64 y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator-() const { return {-x, -y}; }
    LatticePoint operator*(i64 s) const { return {x * s, y * s}; }
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

inline i64 dot(const LatticePoint& u, const LatticePoint& v) { return u.x * v.x + u.y * v.y; }
inline i64 cross(const LatticePoint& u, const LatticePoint& v) { return u.x * v.y - u.y * v.x; }
inline bool is_zero(const LatticePoint& p) { return p.x == 0 && p.y == 0; }

i64 gcd_i64(i64 a, i64 b);

bool is_primitive(const LatticePoint& p);

// (v/g, g) with g = gcd(|x|,|y|); errors on the zero vector.
std::pair<LatticePoint, i64> primitive_part(const LatticePoint& v);

// Some z with <u|z> = 1, for primitive u.
LatticePoint dual_unit(const LatticePoint& u);

// Linear unimodular map, acting on column vectors: (x,y) -> (ax+by, cx+dy).
struct UnimodularMap {
    i64 a = 1, b = 0, c = 0, d = 1;

    UnimodularMap() = default;
    UnimodularMap(i64 a_, i64 b_, i64 c_, i64 d_);

    i64 det() const { return a * d - b * c; }
    LatticePoint apply(const LatticePoint& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
    UnimodularMap compose(const UnimodularMap& o) const;  // this after o
    UnimodularMap inverse() const;

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

// Cyclic-quotient type of the cone spanned by primitive, independent u and v.
// (1,0) for smooth cones, otherwise (r,a) with r = |det(u,v)|, 0 < a < r and
// p = (u + a v)/r a lattice point, normalized so a <= a^{-1} mod r.
struct ConeType {
    i64 r = 1;
    i64 a = 0;
    friend bool operator==(const ConeType&, const ConeType&) = default;
    friend auto operator<=>(const ConeType&, const ConeType&) = default;
};

ConeType cone_type(const LatticePoint& u, const LatticePoint& v);

// Width and height of the edge of a 1/r(1,a) cone: w = gcd(r, a+1), h = r/w.
i64 cone_type_width(const ConeType& t);
i64 cone_type_height(const ConeType& t);

} // namespace fanolab
