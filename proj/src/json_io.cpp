#include "fanolab/json_io.hpp"

#include "fanolab/error.hpp"

namespace fanolab {

namespace {

Json point_to_json(const LatticePoint& p) { return Json::array({p.x, p.y}); }

LatticePoint point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw Error(ErrorCode::INVALID_ARGUMENT, "lattice point must be [x, y] with integers");
    return {j[0].get<i64>(), j[1].get<i64>()};
}

Json rat_to_json(const Rat& q) { return rational_to_string(q); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<i64>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(ErrorCode::INVALID_ARGUMENT, "rational must be an integer or a 'p/q' string");
}

} // namespace

Json polygon_to_json(const FanoPolygon& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back(point_to_json(v));
    return Json{{"vertices", verts}};
}

FanoPolygon polygon_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw Error(ErrorCode::INVALID_ARGUMENT, "polygon must be {\"vertices\": [[x,y],...]}");
    std::vector<LatticePoint> verts;
    for (const auto& v : j["vertices"]) verts.push_back(point_from_json(v));
    return FanoPolygon::validate(std::move(verts));
}

Json edges_to_json(const FanoPolygon& p) {
    Json out = Json::array();
    for (const Edge& e : p.edges()) {
        EdgeDecomposition d = decompose_edge(e);
        Json je{{"tail", point_to_json(e.tail)},
                {"head", point_to_json(e.head)},
                {"inward_normal", point_to_json(e.inward_normal)},
                {"height", e.height},
                {"width", e.width},
                {"t_cones", d.t_cone_count}};
        if (d.r_cone)
            je["r_cone"] = Json{{"r", d.r_cone->r},
                                {"a", d.r_cone->a},
                                {"h", d.r_cone->height},
                                {"w", d.r_cone->width}};
        out.push_back(je);
    }
    return Json{{"edges", out}};
}

Json content_to_json(const SingularityContent& c) {
    Json basket = Json::array();
    for (const RConeData& rc : c.basket)
        basket.push_back(Json{{"r", rc.r}, {"a", rc.a}, {"h", rc.height}, {"w", rc.width}});
    return Json{{"k", c.k_total}, {"basket", basket}};
}

SingularityContent content_from_json(const Json& j) {
    SingularityContent c;
    c.k_total = j.at("k").get<i64>();
    for (const auto& e : j.at("basket")) {
        RConeData rc;
        rc.r = e.at("r").get<i64>();
        rc.a = e.at("a").get<i64>();
        rc.height = e.contains("h") ? e.at("h").get<i64>() : cone_type_height({rc.r, rc.a});
        rc.width = e.contains("w") ? e.at("w").get<i64>() : cone_type_width({rc.r, rc.a});
        c.basket.push_back(rc);
    }
    std::sort(c.basket.begin(), c.basket.end());
    return c;
}

Json laurent_to_json(const LaurentPolynomial& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms())
        out.push_back(Json{{"exp", point_to_json(e)}, {"coeff", rat_to_json(c)}});
    return out;
}

LaurentPolynomial laurent_from_json(const Json& j) {
    const Json& terms = j.is_array() ? j : j.at("terms");
    LaurentPolynomial f;
    for (const auto& t : terms)
        f.add(point_from_json(t.at("exp")), rat_from_json(t.at("coeff")));
    return f;
}

Json symbolic_to_json(const SymbolicLaurentPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json lin = Json::object();
        for (const auto& [id, coeff] : c.terms())
            lin[f.parameter_names[static_cast<size_t>(id)]] = rat_to_json(coeff);
        terms.push_back(Json{{"exp", point_to_json(e)},
                             {"coeff", Json{{"const", rat_to_json(c.constant())}, {"lin", lin}}}});
    }
    Json params = Json::array();
    for (ParamId id : f.free_parameters())
        params.push_back(f.parameter_names[static_cast<size_t>(id)]);
    return Json{{"params", params}, {"terms", terms}};
}

Json matrix_to_json(const MonodromyMatrix& m) {
    Json rows = Json::array();
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < n; ++j) row.push_back(rat_to_json(m.entry(i, j)));
        rows.push_back(row);
    }
    Json basis = Json::array();
    for (const auto& b : m.basis) basis.push_back(b);
    return Json{{"basis", basis}, {"matrix", rows}};
}

MonodromyMatrix matrix_from_json(const Json& j) {
    MonodromyMatrix m;
    for (const auto& b : j.at("basis")) m.basis.push_back(b.get<std::string>());
    const auto& rows = j.at("matrix");
    const size_t n = m.basis.size();
    if (rows.size() != n)
        throw Error(ErrorCode::INVALID_ARGUMENT, "matrix size does not match basis");
    m.cols.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw Error(ErrorCode::INVALID_ARGUMENT, "matrix is not square");
        for (size_t jj = 0; jj < n; ++jj) m.cols[jj][i] = rat_from_json(rows[i][jj]);
    }
    return m;
}

Json sequence_to_json(const PeriodSequence& s) {
    Json coeffs = Json::array();
    for (const Rat& c : s.coeffs) coeffs.push_back(rat_to_json(c));
    return Json{{"coeffs", coeffs}};
}

PeriodSequence sequence_from_json(const Json& j) {
    PeriodSequence s;
    for (const auto& c : j.at("coeffs")) s.coeffs.push_back(rat_from_json(c));
    return s;
}

Json operator_to_json(const DifferentialOperator& op) {
    Json coeffs = Json::array();
    for (const auto& p : op.coeffs) {
        Json jp = Json::array();
        for (const Rat& c : p) jp.push_back(rat_to_json(c));
        coeffs.push_back(jp);
    }
    return Json{{"order", op.order()}, {"coeffs", coeffs}};
}

DifferentialOperator operator_from_json(const Json& j) {
    DifferentialOperator op;
    for (const auto& p : j.at("coeffs")) {
        std::vector<Rat> row;
        for (const auto& c : p) row.push_back(rat_from_json(c));
        op.coeffs.push_back(std::move(row));
    }
    if (op.coeffs.empty())
        throw Error(ErrorCode::INVALID_ARGUMENT, "operator needs at least one nabla power");
    return op;
}

Json graph_to_json(const MutationGraph& g) {
    Json nodes = Json::array();
    for (const auto& node : g.nodes) nodes.push_back(polygon_to_json(node));
    Json arrows = Json::array();
    for (const auto& a : g.arrows)
        arrows.push_back(Json{{"from", a.from},
                              {"to", a.to},
                              {"u", point_to_json(a.data.u)},
                              {"F", point_to_json(a.data.f)}});
    return Json{{"nodes", nodes},
                {"arrows", arrows},
                {"depth", g.exploration_depth},
                {"complete", g.complete}};
}

Json genus_to_json(const GenusReport& r) {
    Json per_edge = Json::array();
    for (const auto& b : r.per_edge)
        per_edge.push_back(Json{{"edge", b.edge},
                                {"t_cones", b.t_cone_count},
                                {"height", b.t_cone_height},
                                {"r_cone_interior", b.r_cone_interior}});
    return Json{{"sectional_genus", r.sectional_genus},
                {"mutable_genus", r.mutable_genus},
                {"operator_order", r.operator_order},
                {"per_edge", per_edge}};
}

Json prediction_to_json(const Prediction& p) {
    return Json{{"g", p.g},
                {"rf", p.rf},
                {"degree", p.degree},
                {"delta", p.delta},
                {"trivial_point_lower_bound", p.trivial_point_lower_bound},
                {"k_eff", p.k_eff},
                {"n", p.n}};
}

} // namespace fanolab
