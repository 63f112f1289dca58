#include "fanolab/genus.hpp"

#include "fanolab/cones.hpp"
#include "fanolab/error.hpp"

namespace fanolab {

i64 sectional_genus(const FanoPolygon& p) {
    return static_cast<i64>(p.interior_lattice_points().size());
}

i64 mutable_genus(const FanoPolygon& p) {
    return r_cone_interior_point_count(p) + 1;
}

std::vector<TConeRef> all_t_cones(const FanoPolygon& p) {
    std::vector<TConeRef> out;
    auto es = p.edges();
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        EdgeDecomposition d = decompose_edge(es[i]);
        for (int j = 0; j < static_cast<int>(d.t_cone_spans.size()); ++j)
            out.push_back({i, j});
    }
    return out;
}

i64 genus_for_assignment(const FanoPolygon& p, const std::vector<TConeRef>& mutable_cones) {
    auto es = p.edges();
    i64 g = sectional_genus(p);
    for (const TConeRef& c : mutable_cones) {
        if (c.edge < 0 || c.edge >= static_cast<int>(es.size()))
            throw Error(ErrorCode::INVALID_ARGUMENT, "T-cone reference out of range");
        EdgeDecomposition d = decompose_edge(es[c.edge]);
        if (c.cone < 0 || c.cone >= static_cast<int>(d.t_cone_spans.size()))
            throw Error(ErrorCode::INVALID_ARGUMENT, "T-cone reference out of range");
        i64 h = es[c.edge].height;
        g -= h * (h - 1) / 2;
    }
    return g;
}

i64 operator_order(const FanoPolygon& p) {
    return 2 * mutable_genus(p);
}

GenusReport genus_report(const FanoPolygon& p) {
    GenusReport r;
    r.sectional_genus = sectional_genus(p);
    r.mutable_genus = mutable_genus(p);
    r.operator_order = 2 * r.mutable_genus;
    auto es = p.edges();
    std::vector<LatticePoint> interior = p.interior_lattice_points();
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        EdgeDecomposition d = decompose_edge(es[i]);
        EdgeGenusBreakdown b;
        b.edge = i;
        b.t_cone_count = d.t_cone_count;
        b.t_cone_height = es[i].height;
        if (d.r_cone_span) {
            for (const auto& q : interior)
                if (!is_zero(q) &&
                    strictly_inside_cone(d.r_cone_span->from, d.r_cone_span->to, q))
                    ++b.r_cone_interior;
        }
        r.per_edge.push_back(b);
    }
    return r;
}

} // namespace fanolab
