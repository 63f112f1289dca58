#include "fanolab/mutation.hpp"

#include "fanolab/error.hpp"

#include <algorithm>
#include <map>

namespace fanolab {

namespace {

struct RatPoint {
    Rat x, y;
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
    friend bool operator<(const RatPoint& a, const RatPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

Rat rp_cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<RatPoint> rational_hull(std::vector<RatPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    std::vector<RatPoint> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && rp_cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower && rp_cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

} // namespace

MutationResult mutate_polygon(const FanoPolygon& p, const MutationData& data) {
    if (!is_primitive(data.u) || !is_primitive(data.f) || dot(data.u, data.f) != 0)
        throw Error(ErrorCode::INVALID_DATA, "mutation data needs primitive u, f with <u|f> = 0");

    // z with <u|z> = 1, so points at height rho are rho*z + t*f.
    const LatticePoint z = dual_unit(data.u);
    const i64 denom = cross(data.u, data.f);  // f-coordinate scale, nonzero

    auto t_coord = [&](const Rat& px, const Rat& py, i64 rho) -> Rat {
        // q = rho*z + t*f  =>  cross(u, q - rho*z) = t * cross(u, f)
        Rat lhs = Rat(static_cast<long>(data.u.x)) * py - Rat(static_cast<long>(data.u.y)) * px -
                  Rat(static_cast<long>(data.u.x * z.y - data.u.y * z.x)) * Rat(static_cast<long>(rho));
        return Rat(lhs / Rat(static_cast<long>(denom)));
    };

    const auto& verts = p.vertices();
    const int n = static_cast<int>(verts.size());
    i64 rho_min = dot(data.u, verts[0]), rho_max = rho_min;
    for (const auto& v : verts) {
        rho_min = std::min(rho_min, dot(data.u, v));
        rho_max = std::max(rho_max, dot(data.u, v));
    }

    // t-interval of the slice at each height, from the boundary edges.
    std::map<i64, std::pair<Rat, Rat>> slices;  // rho -> [t_lo, t_hi]
    auto feed = [&](i64 rho, const Rat& t) {
        auto it = slices.find(rho);
        if (it == slices.end()) {
            slices[rho] = {t, t};
        } else {
            if (t < it->second.first) it->second.first = t;
            if (t > it->second.second) it->second.second = t;
        }
    };
    for (int i = 0; i < n; ++i) {
        LatticePoint a = verts[i], b = verts[(i + 1) % n];
        i64 ra = dot(data.u, a), rb = dot(data.u, b);
        if (ra == rb) {
            feed(ra, t_coord(Rat(static_cast<long>(a.x)), Rat(static_cast<long>(a.y)), ra));
            feed(rb, t_coord(Rat(static_cast<long>(b.x)), Rat(static_cast<long>(b.y)), rb));
            continue;
        }
        i64 lo = std::min(ra, rb), hi = std::max(ra, rb);
        for (i64 rho = lo; rho <= hi; ++rho) {
            // point = a + s(b-a) with <u|point> = rho
            Rat s = make_rat(Int(rho - ra), Int(rb - ra));
            Rat px = Rat(static_cast<long>(a.x)) + s * Rat(static_cast<long>(b.x - a.x));
            Rat py = Rat(static_cast<long>(a.y)) + s * Rat(static_cast<long>(b.y - a.y));
            feed(rho, t_coord(px, py, rho));
        }
    }

    // Transform: rho < 0 loses |rho| copies of [0,f] (Minkowski summand must
    // exist), rho > 0 gains rho copies.
    std::vector<RatPoint> endpoints;
    for (auto& [rho, tt] : slices) {
        Rat lo = tt.first, hi = tt.second;
        if (rho < 0) {
            Rat need(static_cast<long>(-rho));
            if (hi - lo < need)
                throw Error(ErrorCode::NOT_MUTABLE,
                            "slice at height " + std::to_string(rho) + " admits no Minkowski decomposition");
            hi -= need;
        } else if (rho > 0) {
            hi += Rat(static_cast<long>(rho));
        }
        Rat zx = Rat(static_cast<long>(z.x)) * Rat(static_cast<long>(rho));
        Rat zy = Rat(static_cast<long>(z.y)) * Rat(static_cast<long>(rho));
        endpoints.push_back({zx + lo * Rat(static_cast<long>(data.f.x)),
                             zy + lo * Rat(static_cast<long>(data.f.y))});
        endpoints.push_back({zx + hi * Rat(static_cast<long>(data.f.x)),
                             zy + hi * Rat(static_cast<long>(data.f.y))});
    }

    std::vector<RatPoint> hull = rational_hull(std::move(endpoints));
    std::vector<LatticePoint> new_verts;
    new_verts.reserve(hull.size());
    for (const auto& q : hull) {
        if (!is_integer(q.x) || !is_integer(q.y))
            throw Error(ErrorCode::NOT_MUTABLE, "mutation produced a non-lattice vertex");
        new_verts.push_back({to_i64(q.x.get_num()), to_i64(q.y.get_num())});
    }

    MutationResult res;
    FanoPolygon raw = FanoPolygon::validate(new_verts);
    res.raw_vertices = raw.vertices();
    res.polygon = raw.normal_form();
    return res;
}

std::vector<MutationData> available_mutations(const FanoPolygon& p) {
    std::vector<MutationData> out;
    for (const Edge& e : p.edges()) {
        if (e.width < e.height) continue;  // R-cones are rigid
        MutationData d;
        d.u = e.inward_normal;
        d.f = {-e.inward_normal.y, e.inward_normal.x};  // canonical orientation
        out.push_back(d);
    }
    return out;
}

MutationGraph mutation_graph(const FanoPolygon& p, int max_nodes, int max_depth) {
    MutationGraph g;
    FanoPolygon root = p.normal_form();
    std::map<FanoPolygon, int> index;
    index[root] = 0;
    g.nodes.push_back(root);
    std::vector<int> frontier{0};
    g.complete = true;
    int depth = 0;
    while (!frontier.empty() && depth < max_depth) {
        std::vector<int> next;
        for (int node : frontier) {
            FanoPolygon src = g.nodes[node];
            for (const MutationData& d : available_mutations(src)) {
                MutationResult res = mutate_polygon(src, d);
                auto it = index.find(res.polygon);
                int to;
                if (it == index.end()) {
                    if (static_cast<int>(g.nodes.size()) >= max_nodes) {
                        g.complete = false;
                        continue;
                    }
                    to = static_cast<int>(g.nodes.size());
                    index[res.polygon] = to;
                    g.nodes.push_back(res.polygon);
                    next.push_back(to);
                } else {
                    to = it->second;
                }
                g.arrows.push_back({node, to, d});
            }
        }
        frontier = std::move(next);
        ++depth;
    }
    if (!frontier.empty()) g.complete = false;
    g.exploration_depth = depth;
    return g;
}

} // namespace fanolab
