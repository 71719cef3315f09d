#include "zonotopal/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "zonotopal/errors.hpp"
#include "zonotopal/interpolate.hpp"
#include "zonotopal/pspace.hpp"
#include "zonotopal/sampling.hpp"
#include "zonotopal/spline.hpp"
#include "zonotopal/zonotope.hpp"

namespace zonotopal {

bool VerifyReport::passed() const {
    if (precondition_failed) return false;
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.skipped; });
}

namespace {

std::string join_points(const RatVector& u) {
    std::string s = "(";
    for (std::size_t j = 0; j < u.size(); ++j) s += (j ? ", " : "") + to_string(u[j]);
    return s + ")";
}

// Runs body; an exception counts as a failure with its message as detail.
CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, false, ""};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

std::vector<std::size_t> pivots(const VectorList& x, bool allow_coloops) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i]) && (allow_coloops || !is_coloop(x, i))) out.push_back(i);
    return out;
}

RatVector random_point_outside(const VectorList& x, const Zonotope& z, std::mt19937_64& rng) {
    const std::size_t d = x.dim();
    RatVector lo(d), hi(d);
    for (const auto& v : x.vectors())
        for (std::size_t j = 0; j < d; ++j) (v[j] < 0 ? lo[j] : hi[j]) += static_cast<long>(v[j]);
    for (;;) {
        RatVector u(d);
        for (std::size_t j = 0; j < d; ++j) u[j] = random_rational(rng, lo[j] - 2, hi[j] + 2);
        if (!z.contains(u)) return u;
    }
}

GridFunction random_grid_function(const LatticePointSet& pts, std::size_t dim, std::mt19937_64& rng) {
    GridFunction f(dim);
    for (const auto& z : pts.points) f.set(z, random_rational(rng, -5, 5));
    return f;
}

}  // namespace

VerifyReport verify_list(const VectorList& x, const VerifyOptions& opt) {
    VerifyReport report;
    auto& checks = report.checks;
    std::mt19937_64 rng(opt.seed);

    const bool spanning = spans(x);
    checks.push_back({"spans", spanning, false, spanning ? "" : "rank " + std::to_string(rank(x)) + " < dim"});
    const auto witness = tu_violation(x);
    {
        CheckResult c{"totally_unimodular", !witness, false, ""};
        if (witness) {
            std::ostringstream os;
            os << "determinant " << to_string(witness->determinant) << " on rows";
            for (auto r : witness->rows) os << ' ' << r;
            os << ", columns";
            for (auto k : witness->cols) os << ' ' << k;
            c.detail = os.str();
        }
        checks.push_back(c);
    }
    if (!spanning || witness) {
        report.precondition_failed = true;
        return report;
    }

    const TuttePoly t = tutte(x);
    checks.push_back(run_check("tutte_recursion_matches_corank_nullity", [&]() -> std::string {
        return t == tutte_corank_nullity(x) ? "" : "the two Tutte computations differ";
    }));
    checks.push_back(run_check("dim_internal_space_eq_interior_points_eq_T01", [&]() -> std::string {
        const std::size_t a = internal_space(x).dimension();
        const std::size_t b = interior_lattice_points(x).size();
        const Integer c = t.evaluate(0, 1);
        if (Integer(static_cast<unsigned long>(a)) == c && Integer(static_cast<unsigned long>(b)) == c) return "";
        return std::to_string(a) + ", " + std::to_string(b) + ", " + c.get_str();
    }));
    checks.push_back(run_check("dim_central_space_eq_bases_eq_T11", [&]() -> std::string {
        const std::size_t a = central_space(x).dimension();
        const std::size_t b = bases(x).size();
        const Integer c = t.evaluate(1, 1);
        if (Integer(static_cast<unsigned long>(a)) == c && Integer(static_cast<unsigned long>(b)) == c) return "";
        return std::to_string(a) + ", " + std::to_string(b) + ", " + c.get_str();
    }));

    const char* heavy[] = {"deletion_contraction_bijection", "spline_homogeneity", "box_support", "round_trip",
                           "smoothness", "convolution_identity", "diagram_commutativity"};
    if (x.size() > opt.max_n) {
        for (const char* name : heavy)
            checks.push_back({name, false, true, "skipped: list has more than " + std::to_string(opt.max_n) + " vectors"});
        return report;
    }

    checks.push_back(run_check(heavy[0], [&]() -> std::string {
        for (auto i : pivots(x, false)) deletion_contraction_bijection(x, i);
        return "";
    }));

    const PiecewiseSpline box = build_box(x);
    const Zonotope zono = hrep(x);
    checks.push_back(run_check(heavy[1], [&]() -> std::string {
        for (std::size_t k = 0; k < box.pieces.size(); ++k) {
            const MultiPoly& f = box.pieces[k];
            if (!f.is_homogeneous(box.degree)) return "piece " + std::to_string(k) + " is not homogeneous";
            RatVector u = box.arrangement.topes()[k].sample, v = u;
            for (auto& c : v) c *= 2;
            Rational scale = 1;
            for (int e = 0; e < box.degree; ++e) scale *= 2;
            if (eval(f, v) != scale * eval(f, u)) return "scaling fails on piece " + std::to_string(k);
        }
        return "";
    }));
    checks.push_back(run_check(heavy[2], [&]() -> std::string {
        const MultiPoly one = MultiPoly::constant(x.dim(), 1);
        for (std::size_t k = 0; k < opt.outside_samples; ++k) {
            RatVector u = random_point_outside(x, zono, rng);
            Rational v = eval_box_derivative(box, one, u);
            if (v != 0) return "B_X" + join_points(u) + " = " + to_string(v);
        }
        return "";
    }));

    const PSpaceBasis internal = internal_space(x);
    const LatticePointSet pts = interior_lattice_points(x);
    checks.push_back(run_check(heavy[3], [&]() -> std::string {
        for (std::size_t k = 0; k < opt.random_functions; ++k) {
            GridFunction f = random_grid_function(pts, x.dim(), rng);
            Interpolant direct = solve_direct(x, f);
            if (!internal.contains(direct.poly)) return "solution outside P_-(X)";
            if (gamma(x, direct.poly) != f) return "gamma(solve_direct(f)) != f";
            for (PivotRule rule : {PivotRule::first, PivotRule::last})
                if (solve_recursive(x, f, rule).poly != direct.poly) return "recursive and direct solutions differ";
        }
        return "";
    }));
    checks.push_back(run_check(heavy[4], [&]() -> std::string {
        const auto walls = box_walls(box);
        for (const auto& p : internal.basis()) {
            BoxDerivative bd(box, p);
            for (const auto& w : walls)
                for (std::size_t k = 0; k < opt.points_per_wall; ++k) {
                    RatVector u = random_point_on_wall(w, x, rng);
                    auto limits = bd.local_limits(u);
                    for (const auto& l : limits)
                        if (l != limits.front())
                            return "limits of " + to_string(p) + " differ at " + join_points(u) + ": " +
                                   to_string(l) + " vs " + to_string(limits.front());
                }
        }
        return "";
    }));
    checks.push_back(run_check(heavy[5], [&]() -> std::string {
        for (auto i : pivots(x, true)) {
            std::size_t found = 0;
            for (std::size_t tries = 0; found < opt.convolution_samples; ++tries) {
                if (tries > 100 * opt.convolution_samples) return "could not find off-wall samples";
                RatVector u = random_point_in_zonotope(x, rng);
                ConvolutionReport r;
                try {
                    r = check_convolution_identity(x, i, {u});
                } catch (const PreconditionError&) {
                    continue;
                }
                ++found;
                if (!r.holds())
                    return "pivot " + std::to_string(i) + " at " + join_points(u) + ": " + to_string(r.rows[0].lattice_sum) +
                           " vs " + to_string(r.rows[0].contracted);
            }
        }
        return "";
    }));
    checks.push_back(run_check(heavy[6], [&]() -> std::string {
        for (auto i : pivots(x, false)) {
            const VectorList del = deletion(x, i);
            const PSpaceBasis del_internal = internal_space(del);
            const MultiPoly px = linear_form(x[i]);
            std::vector<MultiPoly> lifted;
            for (const auto& p : del_internal.basis()) lifted.push_back(p * px);
            const auto left = gamma_all(x, lifted);
            const auto right = gamma_all(del, del_internal.basis());
            for (std::size_t k = 0; k < left.size(); ++k)
                if (left[k] != nabla(right[k], x[i])) return "gamma(p p_x) != nabla gamma(p) for pivot " + std::to_string(i);

            const Contraction c = contract(x, i);
            std::vector<MultiPoly> projected;
            for (const auto& p : internal.basis()) projected.push_back(project_vars(p, c.quotient_map(), c.child.dim()));
            const auto top = gamma_all(x, internal.basis());
            const auto bottom = gamma_all(c.child, projected);
            for (std::size_t k = 0; k < top.size(); ++k)
                if (sigma(top[k], c) != bottom[k]) return "sigma gamma(p) != gamma(project p) for pivot " + std::to_string(i);
        }
        return "";
    }));
    return report;
}

}  // namespace zonotopal
