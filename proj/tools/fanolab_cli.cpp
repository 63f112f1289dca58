// fanolab: exact lattice combinatorics for Fano polygons and their
// Laurent-polynomial periods. Every subcommand reads and writes the JSON
// formats documented in the README; rationals are "p/q" strings.

#include "fanolab/error.hpp"
#include "fanolab/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fanolab;

Json read_input(const std::string& spec) {
    std::string text;
    if (spec == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) {
        text = spec;
    } else {
        std::ifstream in(spec);
        if (!in)
            throw Error(ErrorCode::INVALID_ARGUMENT, "cannot open input: " + spec);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::INVALID_ARGUMENT, std::string("bad JSON: ") + e.what());
    }
}

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::OUT_OF_SCOPE_BASKET:
        case ErrorCode::UNSUPPORTED_CONE:
            return 3;
        case ErrorCode::NON_INTEGRAL:
            return 4;
        default:
            return 2;
    }
}

struct Output {
    bool pretty = false;
    void emit(const Json& j) const { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }
};

LatticePoint parse_point_option(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorCode::INVALID_ARGUMENT, "expected 'x,y' for a lattice point");
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

int default_max_nodes() {
    if (const char* env = std::getenv("FANOLAB_MAX_NODES"))
        return std::atoi(env);
    return 10000;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fano polygon mutation / singularity content / monodromy / period toolkit"};
    app.require_subcommand(1);

    Output out;
    std::string format = "json";
    app.add_flag("--pretty", out.pretty, "indented human-readable output");
    app.add_option("--format", format, "pretty|json")->check(CLI::IsMember({"pretty", "json"}));

    std::string input;
    std::string op_path, seq_path, u_opt, f_opt, mode = "binomial";
    int n_terms = 12, max_order = 2, max_degree = 5;
    int max_nodes = default_max_nodes(), max_depth = 12, closure_depth = 3, edge_index = -1;

    auto positional = [&](CLI::App* sub) {
        sub->add_option("input", input, "file path, inline JSON, or - for stdin")->required();
    };

    auto* c_validate = app.add_subcommand("validate", "check Fano polygon axioms");
    positional(c_validate);
    auto* c_normal = app.add_subcommand("normal-form", "canonical GL(N) representative");
    positional(c_normal);
    auto* c_edges = app.add_subcommand("edges", "edge heights, widths and cone decompositions");
    positional(c_edges);
    auto* c_content = app.add_subcommand("content", "singularity content (k, basket)");
    positional(c_content);
    auto* c_degree = app.add_subcommand("degree", "anticanonical degree K^2");
    positional(c_degree);
    auto* c_mutate = app.add_subcommand("mutate", "mutate a polygon");
    positional(c_mutate);
    c_mutate->add_option("--u", u_opt, "inward normal of the contracted edge, 'x,y'");
    c_mutate->add_option("--f", f_opt, "factor direction, 'x,y'");
    c_mutate->add_option("--edge", edge_index, "use the i-th available mutation instead");
    auto* c_orbit = app.add_subcommand("orbit", "bounded mutation graph");
    positional(c_orbit);
    c_orbit->add_option("--max-nodes", max_nodes, "node cap (env FANOLAB_MAX_NODES)");
    c_orbit->add_option("--max-depth", max_depth, "BFS depth cap");
    auto* c_mmlp = app.add_subcommand("mmlp", "standard maximally mutable family");
    positional(c_mmlp);
    c_mmlp->add_option("--mode", mode, "binomial|t-binomial")
        ->check(CLI::IsMember({"binomial", "t-binomial"}));
    c_mmlp->add_option("--closure-depth", closure_depth, "mutation-graph closure depth");
    auto* c_genus = app.add_subcommand("genus", "sectional/mutable genus and operator order");
    positional(c_genus);
    auto* c_mono = app.add_subcommand("monodromy", "assemble the monodromy matrix at t=0");
    positional(c_mono);
    auto* c_recover = app.add_subcommand("recover", "singularity content from a monodromy matrix");
    positional(c_recover);
    auto* c_eigen = app.add_subcommand("eigenvalues", "eigenvalue multiset of a monodromy matrix");
    positional(c_eigen);
    auto* c_period = app.add_subcommand("period", "period sequence of a Laurent polynomial");
    positional(c_period);
    c_period->add_option("--n", n_terms, "truncation order N")->required();
    auto* c_apply = app.add_subcommand("apply-op", "apply an operator to a sequence");
    c_apply->add_option("--operator", op_path, "operator JSON")->required();
    c_apply->add_option("--sequence", seq_path, "sequence JSON")->required();
    auto* c_guess = app.add_subcommand("guess-op", "guess the annihilating operator");
    positional(c_guess);
    c_guess->add_option("--max-order", max_order, "order bound");
    c_guess->add_option("--max-degree", max_degree, "degree bound");
    auto* c_predict = app.add_subcommand("predict", "degree/ramification prediction");
    positional(c_predict);

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }
    if (format == "pretty") out.pretty = true;

    try {
        if (c_validate->parsed()) {
            FanoPolygon p = polygon_from_json(read_input(input));
            Json j = polygon_to_json(p);
            j["valid"] = true;
            out.emit(j);
        } else if (c_normal->parsed()) {
            out.emit(polygon_to_json(polygon_from_json(read_input(input)).normal_form()));
        } else if (c_edges->parsed()) {
            out.emit(edges_to_json(polygon_from_json(read_input(input))));
        } else if (c_content->parsed()) {
            out.emit(content_to_json(singularity_content(polygon_from_json(read_input(input)))));
        } else if (c_degree->parsed()) {
            FanoPolygon p = polygon_from_json(read_input(input));
            out.emit(Json{{"K2", rational_to_string(p.anticanonical_degree())}});
        } else if (c_mutate->parsed()) {
            FanoPolygon p = polygon_from_json(read_input(input));
            MutationData data;
            if (edge_index >= 0) {
                auto all = available_mutations(p);
                if (edge_index >= static_cast<int>(all.size()))
                    throw Error(ErrorCode::INVALID_ARGUMENT, "no such mutation index");
                data = all[static_cast<size_t>(edge_index)];
            } else if (!u_opt.empty() && !f_opt.empty()) {
                data.u = parse_point_option(u_opt);
                data.f = parse_point_option(f_opt);
            } else {
                throw Error(ErrorCode::INVALID_ARGUMENT, "need --edge or both --u and --f");
            }
            MutationResult res = mutate_polygon(p, data);
            Json raw = Json::array();
            for (const auto& v : res.raw_vertices) raw.push_back(Json::array({v.x, v.y}));
            Json j = polygon_to_json(res.polygon);
            j["raw_vertices"] = raw;
            out.emit(j);
        } else if (c_orbit->parsed()) {
            FanoPolygon p = polygon_from_json(read_input(input));
            out.emit(graph_to_json(mutation_graph(p, max_nodes, max_depth)));
        } else if (c_mmlp->parsed()) {
            FanoPolygon p = polygon_from_json(read_input(input));
            EdgeMode m = mode == "t-binomial" ? EdgeMode::T_BINOMIAL : EdgeMode::BINOMIAL;
            MmlpResult res = standard_mmlp(p, m, closure_depth);
            Json j = symbolic_to_json(res.f);
            j["stabilized"] = res.stabilized;
            j["depth_reached"] = res.depth_reached;
            j["free_parameter_count"] = res.f.free_parameters().size();
            out.emit(j);
        } else if (c_genus->parsed()) {
            out.emit(genus_to_json(genus_report(polygon_from_json(read_input(input)))));
        } else if (c_mono->parsed()) {
            out.emit(matrix_to_json(assemble_monodromy(polygon_from_json(read_input(input)))));
        } else if (c_recover->parsed()) {
            out.emit(content_to_json(recover_content(matrix_from_json(read_input(input)))));
        } else if (c_eigen->parsed()) {
            auto eig = eigenvalue_multiset(matrix_from_json(read_input(input)));
            Json arr = Json::array();
            for (auto [d, mult] : eig)
                arr.push_back(Json{{"order", d}, {"multiplicity", mult}});
            out.emit(Json{{"eigenvalues", arr}});
        } else if (c_period->parsed()) {
            LaurentPolynomial f = laurent_from_json(read_input(input));
            out.emit(sequence_to_json(period_sequence(f, n_terms)));
        } else if (c_apply->parsed()) {
            DifferentialOperator op = operator_from_json(read_input(op_path));
            PeriodSequence s = sequence_from_json(read_input(seq_path));
            Json j = Json{{"residual", sequence_to_json(apply_operator(op, s))["coeffs"]}};
            out.emit(j);
        } else if (c_guess->parsed()) {
            PeriodSequence s = sequence_from_json(read_input(input));
            auto op = guess_operator(s, max_order, max_degree);
            if (!op) {
                out.emit(Json{{"result", "NONE"}});
            } else {
                out.emit(operator_to_json(*op));
            }
        } else if (c_predict->parsed()) {
            out.emit(prediction_to_json(predict(polygon_from_json(read_input(input)))));
        }
    } catch (const OutOfScopeBasket& e) {
        Json j{{"error", "OUT_OF_SCOPE_BASKET"},
               {"detail", e.what()},
               {"extrapolated", prediction_to_json(e.extrapolated())}};
        out.emit(j);
        return 3;
    } catch (const Error& e) {
        out.emit(Json{{"error", to_string(e.code())}, {"detail", e.what()}});
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        out.emit(Json{{"error", "INTERNAL"}, {"detail", e.what()}});
        return 4;
    }
    return 0;
}
