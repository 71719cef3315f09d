#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/sampling.hpp"
#include "zonotopal/spline.hpp"
#include "zonotopal/zonotope.hpp"

using namespace zonotopal;

namespace {

Rational tval(const PiecewiseSpline& t, RatVector u) {
    return eval_multivariate(t, MultiPoly::constant(t.source.dim(), 1), u);
}

Rational bval(const PiecewiseSpline& b, RatVector u, MultiPoly p = MultiPoly()) {
    if (p.nvars() != b.source.dim()) p = MultiPoly::constant(b.source.dim(), 1);
    return eval_box_derivative(b, p, u);
}

Rational tp(const Rational& t, int k) {
    if (t <= 0) return 0;
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= t;
    return r;
}

}  // namespace

TEST_CASE("multivariate spline of the hexagon list") {
    PiecewiseSpline t = build_multivariate(testing::fig1());
    CHECK(t.degree == 1);
    // min(u1, u2) on the positive quadrant
    CHECK(tval(t, {Rational(3), Rational(1, 2)}) == Rational(1, 2));
    CHECK(tval(t, {Rational(1, 3), Rational(2)}) == Rational(1, 3));
    CHECK(tval(t, {Rational(-1), Rational(2)}) == 0);
    CHECK(tval(t, {Rational(1), Rational(-1, 5)}) == 0);
}

TEST_CASE("multivariate spline of a basis and of (1,1)") {
    PiecewiseSpline c = build_multivariate(VectorList(2, {{1, 0}, {0, 1}}));
    CHECK(tval(c, {Rational(5), Rational(1, 7)}) == 1);
    CHECK(tval(c, {Rational(-5), Rational(1, 7)}) == 0);
    PiecewiseSpline d = build_multivariate(testing::ones(2));
    CHECK(tval(d, {Rational(7, 3)}) == Rational(7, 3));
    CHECK(tval(d, {Rational(-1, 3)}) == 0);
}

TEST_CASE("pieces vanish outside the cone") {
    for (const auto& [name, x] : testing::suite()) {
        if (x.size() > 7 || !spans(x)) continue;
        INFO(name);
        PiecewiseSpline t = build_multivariate(x);
        for (std::size_t k = 0; k < t.pieces.size(); ++k) {
            const RatVector& s = t.arrangement.topes()[k].sample;
            // Caratheodory: s is in cone(X) iff some basis writes it with nonnegative weights.
            bool inside = false;
            testing::for_each_combination(t.source.size(), t.source.dim(), [&](const std::vector<std::size_t>& idx) {
                std::vector<IntVec> cols;
                for (auto i : idx) cols.push_back(t.source[i]);
                if (testing::det_small(cols) == 0) return;
                auto l = testing::cramer(cols, s);
                inside = inside || std::all_of(l.begin(), l.end(), [](const Rational& v) { return v >= 0; });
            });
            CHECK(t.pieces[k].is_zero() == !inside);
        }
    }
}

TEST_CASE("hat function in closed form") {
    PiecewiseSpline b = build_box(testing::ones(2));
    for (int j = -2; j <= 10; ++j) {
        Rational s = Rational(j) / 2;
        CHECK(bval(b, {s}) == tp(s, 1) - 2 * tp(s - 1, 1) + tp(s - 2, 1));
    }
}

TEST_CASE("box spline of a basis is the indicator of the unit square") {
    PiecewiseSpline b = build_box(VectorList(2, {{1, 0}, {0, 1}}));
    CHECK(bval(b, {Rational(1, 2), Rational(1, 3)}) == 1);
    CHECK(bval(b, {Rational(3, 2), Rational(1, 3)}) == 0);
    CHECK(bval(b, {Rational(1, 2), Rational(-1, 3)}) == 0);
}

TEST_CASE("support of the hexagon box spline") {
    VectorList x = testing::fig1();
    PiecewiseSpline b = build_box(x);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 40; ++k) {
        RatVector u{random_rational(rng, -1, 3), random_rational(rng, -1, 3)};
        if (on_box_wall(b, u)) continue;
        CHECK((bval(b, u) > 0) == testing::in_interior_oracle(x, u));
    }
}

TEST_CASE("point values and derivatives") {
    CHECK(bval(build_box(testing::ones(3)), {Rational(1)}) == Rational(1, 2));
    PiecewiseSpline b4 = build_box(testing::ones(4));
    CHECK(bval(b4, {Rational(1)}, MultiPoly::variable(1, 0)) == Rational(1, 2));
    CHECK(bval(build_box(testing::fig1()), {Rational(1), Rational(1)}) == 1);
}

TEST_CASE("cardinal closed form") {
    CHECK(cardinal_bspline(2, 1) == 1);
    CHECK(cardinal_bspline(4, 2) == Rational(2, 3));
    CHECK(cardinal_bspline(3, 0) == 0);
    for (std::size_t n = 2; n <= 7; ++n)
        for (int j = -1; j <= 2 * static_cast<int>(n) + 2; ++j) {
            Rational u = Rational(j) / 2;
            INFO("n = " << n << " u = " << to_string(u));
            CHECK(cardinal_bspline(n, u) == testing::cox_de_boor(n, u));
        }
}

TEST_CASE("general engine equals the closed form on the cardinal lists") {
    for (std::size_t n = 2; n <= 7; ++n) {
        PiecewiseSpline b = build_box(testing::ones(n));
        for (int j = 0; j <= 2 * static_cast<int>(n); ++j) {
            Rational u = Rational(j) / 2;
            CHECK(bval(b, {u}) == cardinal_bspline(n, u));
        }
    }
}

TEST_CASE("negated vectors shift the box spline") {
    // (-1, 1) is the hat function translated to [-1, 1]
    PiecewiseSpline b = build_box(VectorList(1, {{-1}, {1}}));
    CHECK(bval(b, {Rational(0)}) == 1);
    CHECK(bval(b, {Rational(-1, 2)}) == Rational(1, 2));
    CHECK(bval(b, {Rational(3, 2)}) == 0);
}

TEST_CASE("discontinuity is reported") {
    // (1,0) is a coloop, so B_X jumps across u1 = 0
    PiecewiseSpline b = build_box(VectorList(2, {{1, 0}, {0, 1}, {0, 1}}));
    try {
        bval(b, {Rational(0), Rational(1)});
        FAIL("expected DiscontinuityError");
    } catch (const DiscontinuityError& e) {
        CHECK(((e.first_limit == 1 && e.second_limit == 0) || (e.first_limit == 0 && e.second_limit == 1)));
    }
    BoxDerivative d(b, MultiPoly::constant(2, 1));
    auto limits = d.local_limits({Rational(0), Rational(1)});
    // walls u1 = 0 and u2 = 1 both pass through the point
    CHECK(limits.size() == 4);
    CHECK(std::count(limits.begin(), limits.end(), Rational(1)) == 2);
    CHECK(std::count(limits.begin(), limits.end(), Rational(0)) == 2);
}

TEST_CASE("differentiation identities") {
    std::mt19937_64 rng(11);
    for (const auto& [name, x] : testing::suite()) {
        if (x.size() > 7 || has_coloop(x)) continue;
        PiecewiseSpline b = build_box(x);
        for (std::size_t i = 0; i < x.size(); ++i) {
            VectorList del = deletion(x, i);
            if (!spans(del)) continue;
            INFO(name << " vector " << i);
            PiecewiseSpline bd = build_box(del);
            for (const auto& u : off_wall_points(b, x, 2, rng)) {
                RatVector v = u;
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= static_cast<long>(x[i][j]);
                if (on_box_wall(bd, u) || on_box_wall(bd, v)) continue;
                CHECK(bval(b, u, linear_form(x[i])) == bval(bd, u) - bval(bd, v));
            }
        }
    }
}

TEST_CASE("multivariate derivative along a vector deletes it") {
    VectorList x(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
    PiecewiseSpline t = build_multivariate(x);
    PiecewiseSpline td = build_multivariate(deletion(x, 3));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        RatVector u{random_rational(rng, -2, 5), random_rational(rng, -2, 5)};
        if (t.arrangement.on_wall(u) || td.arrangement.on_wall(u)) continue;
        CHECK(eval_multivariate(t, linear_form({1, 2}), u) == tval(td, u));
    }
}

TEST_CASE("convolution identity") {
    ConvolutionReport r = check_convolution_identity(testing::fig1(), 2, {{Rational(1), Rational(1)}});
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].lattice_sum == 1);
    CHECK(r.rows[0].contracted == 1);

    std::vector<RatVector> samples;
    for (int j = 0; j < 9; ++j) samples.push_back({(Rational(j) / 4)});
    ConvolutionReport d1 = check_convolution_identity(testing::ones(2), 1, samples);
    CHECK(d1.holds());
    for (const auto& row : d1.rows) CHECK(row.lattice_sum == 1);

    CHECK_THROWS_AS(check_convolution_identity(VectorList(2, {{1, 0}, {0, 1}, {0, 1}}), 1, {{Rational(0), Rational(1, 3)}}),
                    PreconditionError);
    CHECK_THROWS_AS(check_convolution_identity(VectorList(2, {{1, 0}, {0, 1}, {1, 2}}), 0, {{Rational(1, 3), Rational(1, 3)}}),
                    PreconditionError);
}

TEST_CASE("non-spanning lists are rejected") {
    CHECK_THROWS_AS(build_multivariate(VectorList(2, {{1, 1}, {2, 2}})), PreconditionError);
    CHECK_THROWS_AS(build_box(VectorList(2, {{1, 1}})), PreconditionError);
}
