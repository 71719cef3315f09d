// zonotopal: command-line access to the library. Every command prints JSON.
//
// Exit codes: 0 success, 1 malformed input, 2 violated precondition
// (non-spanning or non-TU list, values outside Z_-(X), discontinuous evaluation).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "zonotopal/errors.hpp"
#include "zonotopal/interpolate.hpp"
#include "zonotopal/io.hpp"
#include "zonotopal/pspace.hpp"
#include "zonotopal/spline.hpp"
#include "zonotopal/verify.hpp"
#include "zonotopal/zonotope.hpp"

using namespace zonotopal;
using io::Json;

namespace {

struct Options {
    std::string matrix_path;
    bool as_float = false;
};

Json read_json(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw FormatError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

VectorList read_matrix(const Options& o) { return io::vector_list_from_json(read_json(o.matrix_path)); }

void emit(const Options& o, const Json& j) { std::cout << (o.as_float ? io::approximate(j) : j).dump(2) << '\n'; }

void require_spanning(const VectorList& x) {
    if (!spans(x)) throw PreconditionError("list does not span R^" + std::to_string(x.dim()));
}

RatVector parse_point(const std::string& text, std::size_t dim) {
    RatVector out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(parse_rational(part));
        } catch (const std::invalid_argument&) {
            throw FormatError("malformed coordinate \"" + part + "\" in --point");
        }
    }
    if (out.size() != dim) throw FormatError("--point needs " + std::to_string(dim) + " comma-separated coordinates");
    return out;
}

Json cmd_check_tu(const VectorList& x) {
    auto w = tu_violation(x);
    Json out{{"tu", !w.has_value()}};
    if (w) out["witness"] = Json{{"rows", w->rows}, {"cols", w->cols}, {"determinant", io::to_json(w->determinant)}};
    return out;
}

Json cmd_tutte(const VectorList& x) {
    const TuttePoly t = tutte(x);
    Json out = io::to_json(t);
    out["T(0,1)"] = t.evaluate(0, 1).get_str();
    out["T(1,1)"] = t.evaluate(1, 1).get_str();
    return out;
}

Json cmd_spline_eval(const VectorList& x, const std::vector<std::string>& points, const std::string& diff,
                     bool multivariate) {
    require_spanning(x);
    MultiPoly p = MultiPoly::constant(x.dim(), 1);
    if (!diff.empty()) {
        Json j;
        try {
            j = Json::parse(diff);
        } catch (const Json::parse_error& e) {
            throw FormatError(std::string("--diff is not valid JSON: ") + e.what());
        }
        p = io::poly_from_json(j, x.dim());
    }
    const PiecewiseSpline s = multivariate ? build_multivariate(x) : build_box(x);
    Json values = Json::array();
    for (const auto& text : points) {
        RatVector u = parse_point(text, x.dim());
        if (multivariate) {
            // T_X of the original list is T of the normalized list only when nothing was flipped.
            if (std::any_of(s.translation.begin(), s.translation.end(), [](auto c) { return c != 0; }))
                throw PreconditionError("T_X is only available for lists lying in an open half-space");
        }
        Rational v = multivariate ? eval_multivariate(s, p, u) : eval_box_derivative(s, p, u);
        Json entry = Json::array();
        for (const auto& c : u) entry.push_back(io::to_json(c));
        values.push_back(Json{{"point", entry}, {"value", io::to_json(v)}});
    }
    return Json{{"spline", multivariate ? "multivariate" : "box"}, {"values", values}};
}

Json verify_json(const VectorList& x, const VerifyReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e{{"name", c.name}, {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(e);
    }
    return Json{{"matrix", io::to_json(x)}, {"pass", r.passed()}, {"checks", checks}};
}

int fail(int code, const std::string& message, Json extra = Json::object()) {
    extra["error"] = message;
    std::cout << extra.dump(2) << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact box splines, zonotopal P-spaces and lattice interpolation"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--matrix", o.matrix_path, "JSON file {\"dim\", \"vectors\"}; stdin if omitted");
        sub->add_flag("--float", o.as_float, "Render rationals as decimal approximations");
    };

    auto* check_tu = app.add_subcommand("check-tu", "Total unimodularity with a witness submatrix");
    auto* points = app.add_subcommand("points", "Interior lattice points Z_-(X)");
    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial and its values at (0,1) and (1,1)");
    auto* pspace = app.add_subcommand("pspace", "Graded basis of P(X) or P_-(X)");
    auto* spline = app.add_subcommand("spline-eval", "Exact values of p(D)B_X or p(D)T_X");
    auto* interp = app.add_subcommand("interpolate", "Solve p(D)B_X = f on Z_-(X)");
    auto* verify = app.add_subcommand("verify", "Run the invariant suite on one list");
    for (auto* sub : {check_tu, points, tutte_cmd, pspace, spline, verify}) common(sub);

    bool internal_flag = false, central_flag = false;
    auto* g = pspace->add_option_group("kind");
    g->add_flag("--internal", internal_flag, "P_-(X)");
    g->add_flag("--central", central_flag, "P(X)");
    g->require_option(1);

    std::vector<std::string> point_args;
    std::string diff;
    bool multivariate = false;
    spline->add_option("--point", point_args, "Comma-separated rational coordinates, e.g. 1/2,1")->required();
    spline->add_option("--diff", diff, "Polynomial p as JSON [{\"exps\": [...], \"coef\": \"p/q\"}]");
    spline->add_flag("--multivariate", multivariate, "Evaluate T_X instead of B_X");

    std::string values_path, solver = "direct", pivot = "first";
    interp->add_option("--values", values_path, "JSON file {\"matrix\", \"values\"}; stdin if omitted");
    interp->add_option("--solver", solver, "direct or recursive")->check(CLI::IsMember({"direct", "recursive"}));
    interp->add_option("--pivot", pivot, "Pivot rule of the recursive solver")->check(CLI::IsMember({"first", "last"}));
    interp->add_flag("--float", o.as_float, "Render rationals as decimal approximations");

    VerifyOptions vo;
    verify->add_option("--max-n", vo.max_n, "Skip spline and solver checks for longer lists");
    verify->add_option("--seed", vo.seed, "Seed for the random samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(1, e.what());
    }

    try {
        if (*check_tu) {
            emit(o, cmd_check_tu(read_matrix(o)));
        } else if (*points) {
            VectorList x = read_matrix(o);
            require_spanning(x);
            emit(o, io::to_json(interior_lattice_points(x)));
        } else if (*tutte_cmd) {
            emit(o, cmd_tutte(read_matrix(o)));
        } else if (*pspace) {
            VectorList x = read_matrix(o);
            emit(o, io::to_json(internal_flag ? internal_space(x) : central_space(x)));
        } else if (*spline) {
            emit(o, cmd_spline_eval(read_matrix(o), point_args, diff, multivariate));
        } else if (*interp) {
            io::ValuesFile vf = io::values_file_from_json(read_json(values_path));
            Interpolant r = solver == "direct"
                                ? solve_direct(vf.matrix, vf.values)
                                : solve_recursive(vf.matrix, vf.values, pivot == "first" ? PivotRule::first : PivotRule::last);
            Json out = io::to_json(r);
            out["poly_text"] = to_string(r.poly);
            emit(o, out);
        } else if (*verify) {
            VectorList x = read_matrix(o);
            VerifyReport r = verify_list(x, vo);
            emit(o, verify_json(x, r));
            if (r.precondition_failed) return 2;
            return r.passed() ? 0 : 3;
        }
    } catch (const FormatError& e) {
        return fail(1, e.what());
    } catch (const DiscontinuityError& e) {
        return fail(2, e.what(), Json{{"limits", {io::to_json(e.first_limit), io::to_json(e.second_limit)}}});
    } catch (const PreconditionError& e) {
        return fail(2, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(1, e.what());
    } catch (const std::out_of_range& e) {
        return fail(1, e.what());
    } catch (const std::exception& e) {
        return fail(4, std::string("internal error: ") + e.what());
    }
    return 0;
}
