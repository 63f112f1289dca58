#include "fanolab/polygon.hpp"

#include "fanolab/error.hpp"

#include <algorithm>
#include <set>

namespace fanolab {

// Andrew's monotone chain; returns hull vertices ccw, collinear points dropped.
std::vector<LatticePoint> convex_hull_ccw(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    std::vector<LatticePoint> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

namespace {

void anchor_at_lex_min(std::vector<LatticePoint>& verts) {
    auto it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), it, verts.end());
}

Edge make_edge(const LatticePoint& tail, const LatticePoint& head) {
    Edge e;
    e.tail = tail;
    e.head = head;
    auto [dir, width] = primitive_part(head - tail);
    e.width = width;
    LatticePoint n{-dir.y, dir.x};
    i64 pairing = dot(n, tail);
    if (pairing > 0) n = -n, pairing = -pairing;
    if (pairing == 0)
        throw Error(ErrorCode::ORIGIN_NOT_INTERIOR, "edge line passes through the origin");
    e.inward_normal = n;
    e.height = -pairing;
    return e;
}

} // namespace

FanoPolygon FanoPolygon::validate(std::vector<LatticePoint> vertices) {
    std::vector<LatticePoint> hull = convex_hull_ccw(vertices);
    if (hull.size() < 3)
        throw Error(ErrorCode::NOT_2D, "fewer than 3 distinct extreme points");

    // Origin strictly interior: strictly positive side of every edge.
    for (size_t i = 0; i < hull.size(); ++i) {
        const LatticePoint& a = hull[i];
        const LatticePoint& b = hull[(i + 1) % hull.size()];
        if (cross(b - a, LatticePoint{0, 0} - a) <= 0)
            throw Error(ErrorCode::ORIGIN_NOT_INTERIOR, "origin is not a strict interior point");
    }

    for (const auto& v : hull)
        if (!is_primitive(v))
            throw Error(ErrorCode::NONPRIMITIVE_VERTEX, "vertex is not primitive");

    // Every input point must be a hull vertex (strict convexity of the list).
    std::set<LatticePoint> hull_set(hull.begin(), hull.end());
    for (const auto& v : vertices)
        if (!hull_set.count(v))
            throw Error(ErrorCode::NOT_CONVEX, "vertex list is not strictly convex");

    anchor_at_lex_min(hull);
    FanoPolygon p;
    p.vertices_ = std::move(hull);
    return p;
}

std::vector<Edge> FanoPolygon::edges() const {
    std::vector<Edge> out;
    out.reserve(vertices_.size());
    for (size_t i = 0; i < vertices_.size(); ++i)
        out.push_back(make_edge(vertices_[i], vertices_[(i + 1) % vertices_.size()]));
    return out;
}

bool FanoPolygon::contains(const LatticePoint& p) const {
    for (size_t i = 0; i < vertices_.size(); ++i) {
        const LatticePoint& a = vertices_[i];
        const LatticePoint& b = vertices_[(i + 1) % vertices_.size()];
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

bool FanoPolygon::strictly_contains(const LatticePoint& p) const {
    for (size_t i = 0; i < vertices_.size(); ++i) {
        const LatticePoint& a = vertices_[i];
        const LatticePoint& b = vertices_[(i + 1) % vertices_.size()];
        if (cross(b - a, p - a) <= 0) return false;
    }
    return true;
}

std::vector<LatticePoint> FanoPolygon::lattice_points() const {
    i64 xmin = vertices_[0].x, xmax = xmin, ymin = vertices_[0].y, ymax = ymin;
    for (const auto& v : vertices_) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    std::vector<LatticePoint> out;
    for (i64 x = xmin; x <= xmax; ++x)
        for (i64 y = ymin; y <= ymax; ++y)
            if (contains({x, y})) out.push_back({x, y});
    return out;
}

std::vector<LatticePoint> FanoPolygon::interior_lattice_points() const {
    std::vector<LatticePoint> out;
    for (const auto& p : lattice_points())
        if (strictly_contains(p)) out.push_back(p);
    return out;
}

std::vector<LatticePoint> FanoPolygon::boundary_lattice_points() const {
    std::vector<LatticePoint> out;
    for (const auto& p : lattice_points())
        if (!strictly_contains(p)) out.push_back(p);
    return out;
}

i64 FanoPolygon::area2() const {
    i64 acc = 0;
    for (size_t i = 0; i < vertices_.size(); ++i)
        acc += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    return acc;  // ccw, so positive
}

Rat FanoPolygon::anticanonical_degree() const {
    auto es = edges();
    Rat total(0);
    const size_t n = es.size();
    for (size_t i = 0; i < n; ++i) {
        // Vertex shared by edge i-1 and edge i; normal-fan cone spanned by
        // the two inward normals has index r; each vertex contributes r/(m n).
        const Edge& left = es[(i + n - 1) % n];
        const Edge& right = es[i];
        i64 r = cross(left.inward_normal, right.inward_normal);
        if (r < 0) r = -r;
        total += make_rat(Int(r), Int(left.height) * Int(right.height));
    }
    return total;
}

Rat FanoPolygon::dual_volume() const {
    // Dual vertices u_E / h_E in edge order; normalized volume = 2 * area.
    auto es = edges();
    Rat twice_area(0);
    const size_t n = es.size();
    for (size_t i = 0; i < n; ++i) {
        const Edge& e = es[i];
        const Edge& f = es[(i + 1) % n];
        Rat ax = make_rat(Int(e.inward_normal.x), Int(e.height));
        Rat ay = make_rat(Int(e.inward_normal.y), Int(e.height));
        Rat bx = make_rat(Int(f.inward_normal.x), Int(f.height));
        Rat by = make_rat(Int(f.inward_normal.y), Int(f.height));
        twice_area += ax * by - ay * bx;
    }
    if (twice_area < 0) twice_area = -twice_area;
    return twice_area;
}

FanoPolygon FanoPolygon::transformed(const UnimodularMap& m) const {
    std::vector<LatticePoint> verts;
    verts.reserve(vertices_.size());
    for (const auto& v : vertices_) verts.push_back(m.apply(v));
    return validate(std::move(verts));
}

namespace {

// Some (f1,f2) with f1*a + f2*b = 1, for gcd(a,b) = 1.
std::pair<i64, i64> cofactor_row(i64 a, i64 b) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    i64 u = a, v = b;
    while (v != 0) {
        i64 q = u / v;
        i64 r = u - q * v;
        u = v;
        v = r;
        i64 nx = x0 - q * x1, ny = y0 - q * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
    }
    if (u < 0) { x0 = -x0; y0 = -y0; }
    return {x0, y0};
}

i64 floor_div_i64(i64 a, i64 b) {  // b > 0
    return (a >= 0) ? a / b : -((-a + b - 1) / b);
}

} // namespace

FanoPolygon FanoPolygon::normal_form() const {
    // One unimodular frame per directed edge: edge direction -> (1,0),
    // inward normal as second row (edge lands on y = -h, interior above),
    // shear pinned by reducing the mapped tail x into [0, h). The normal
    // form is the lexicographic minimum over the candidate vertex lists,
    // each read in the image's ccw order starting at the tail.
    const int n = vertex_count();
    auto es = edges();
    std::vector<LatticePoint> best;
    for (int i = 0; i < n; ++i) {
        for (int rev = 0; rev < 2; ++rev) {
            const LatticePoint tail = rev ? es[i].head : es[i].tail;
            const LatticePoint dir =
                primitive_part(rev ? es[i].tail - es[i].head : es[i].head - es[i].tail).first;
            const LatticePoint& nrm = es[i].inward_normal;
            const i64 h = es[i].height;
            auto [f1, f2] = cofactor_row(dir.x, dir.y);
            // x -> f0(p) + s*nrm(p): tail x becomes x0 - s*h, reduced mod h.
            const i64 x0 = f1 * tail.x + f2 * tail.y;
            const i64 s = floor_div_i64(x0, h);
            auto full = [&](const LatticePoint& p) {
                i64 y = dot(nrm, p);  // nrm(tail) = -h
                return LatticePoint{f1 * p.x + f2 * p.y + s * y, y};
            };
            const i64 det = f1 * nrm.y - f2 * nrm.x;  // shear-invariant, = +-1
            std::vector<LatticePoint> cand(n);
            const int start = rev ? (i + 1) % n : i;
            for (int k = 0; k < n; ++k) {
                int idx = det > 0 ? (start + k) % n : (start - k + n) % n;
                cand[k] = full(vertices_[idx]);
            }
            if (best.empty() || cand < best) best = cand;
        }
    }
    return validate(std::move(best));
}

} // namespace fanolab
