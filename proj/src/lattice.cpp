#include "fanolab/lattice.hpp"

#include "fanolab/error.hpp"

#include <numeric>
#include <ostream>

namespace fanolab {

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    return os << "(" << p.x << "," << p.y << ")";
}

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_primitive(const LatticePoint& p) {
    return !is_zero(p) && gcd_i64(p.x, p.y) == 1;
}

std::pair<LatticePoint, i64> primitive_part(const LatticePoint& v) {
    if (is_zero(v))
        throw Error(ErrorCode::INVALID_ARGUMENT, "primitive_part of zero vector");
    i64 g = gcd_i64(v.x, v.y);
    return {{v.x / g, v.y / g}, g};
}

LatticePoint dual_unit(const LatticePoint& u) {
    if (!is_primitive(u))
        throw Error(ErrorCode::INVALID_DATA, "dual_unit requires a primitive vector");
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1, a = u.x, b = u.y;
    while (b != 0) {
        i64 q = a / b, r = a - q * b;
        a = b;
        b = r;
        i64 nx = x0 - q * x1, ny = y0 - q * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
    }
    if (a < 0) { x0 = -x0; y0 = -y0; }
    return {x0, y0};
}

UnimodularMap::UnimodularMap(i64 a_, i64 b_, i64 c_, i64 d_) : a(a_), b(b_), c(c_), d(d_) {
    i64 dt = det();
    if (dt != 1 && dt != -1)
        throw Error(ErrorCode::INVALID_DATA, "matrix is not unimodular");
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

UnimodularMap UnimodularMap::inverse() const {
    i64 dt = det();
    return {d * dt, -b * dt, -c * dt, a * dt};
}

namespace {

// Smallest a in [1, r-1] with (u + a v)/r integral; the witness point p found
// by brute force over the fundamental parallelogram (p = (1/r)u + (a/r)v).
i64 type_parameter(const LatticePoint& u, const LatticePoint& v, i64 r) {
    for (i64 a = 1; a < r; ++a) {
        if ((u.x + a * v.x) % r == 0 && (u.y + a * v.y) % r == 0)
            return a;
    }
    throw Error(ErrorCode::INVALID_DATA, "no cyclic-quotient parameter found (non-primitive rays?)");
}

} // namespace

ConeType cone_type(const LatticePoint& u, const LatticePoint& v) {
    if (!is_primitive(u) || !is_primitive(v))
        throw Error(ErrorCode::INVALID_DATA, "cone_type requires primitive rays");
    i64 r = cross(u, v);
    if (r < 0) r = -r;
    if (r == 0)
        throw Error(ErrorCode::INVALID_DATA, "cone_type requires independent rays");
    if (r == 1)
        return {1, 0};
    i64 a = type_parameter(u, v, r);
    i64 a_inv = type_parameter(v, u, r);
    return {r, a <= a_inv ? a : a_inv};
}

i64 cone_type_width(const ConeType& t) {
    if (t.r == 1) return 1;
    return gcd_i64(t.r, t.a + 1);
}

i64 cone_type_height(const ConeType& t) {
    return t.r / cone_type_width(t);
}

} // namespace fanolab
