#include "fanolab/cones.hpp"

#include "fanolab/error.hpp"

#include <algorithm>

namespace fanolab {

bool strictly_inside_cone(const LatticePoint& a, const LatticePoint& b, const LatticePoint& q) {
    i64 o = cross(a, b);
    if (o == 0)
        throw Error(ErrorCode::INVALID_DATA, "degenerate cone");
    if (o < 0) return strictly_inside_cone(b, a, q);
    return cross(a, q) > 0 && cross(q, b) > 0;
}

EdgeDecomposition decompose_edge(const Edge& e) {
    EdgeDecomposition d;
    d.edge = e;
    const LatticePoint step = primitive_part(e.head - e.tail).first;
    const i64 k = e.width / e.height;
    const i64 rem = e.width % e.height;
    d.t_cone_count = k;
    LatticePoint at = e.tail;
    if (rem > 0) {
        LatticePoint to = at + step * rem;
        d.r_cone_span = SubSpan{at, to};
        RConeData rc;
        rc.height = e.height;
        rc.width = rem;
        ConeType t = cone_type(primitive_part(at).first, primitive_part(to).first);
        rc.r = t.r;
        rc.a = t.a;
        d.r_cone = rc;
        at = to;
    }
    for (i64 i = 0; i < k; ++i) {
        LatticePoint to = at + step * e.height;
        d.t_cone_spans.push_back(SubSpan{at, to});
        at = to;
    }
    return d;
}

SingularityContent singularity_content(const FanoPolygon& p) {
    SingularityContent c;
    for (const Edge& e : p.edges()) {
        EdgeDecomposition d = decompose_edge(e);
        c.k_total += d.t_cone_count;
        if (d.r_cone) c.basket.push_back(*d.r_cone);
    }
    std::sort(c.basket.begin(), c.basket.end());
    return c;
}

std::vector<LatticePoint> r_cone_interior_points(const FanoPolygon& p) {
    std::vector<LatticePoint> interior = p.interior_lattice_points();
    std::vector<LatticePoint> out;
    for (const Edge& e : p.edges()) {
        EdgeDecomposition d = decompose_edge(e);
        if (!d.r_cone_span) continue;
        for (const auto& q : interior)
            if (!is_zero(q) && strictly_inside_cone(d.r_cone_span->from, d.r_cone_span->to, q))
                out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 r_cone_interior_point_count(const FanoPolygon& p) {
    return static_cast<i64>(r_cone_interior_points(p).size());
}

} // namespace fanolab
