#include <doctest.h>

#include "support.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/pspace.hpp"
#include "zonotopal/zonotope.hpp"

using namespace zonotopal;

TEST_CASE("spaces of the cardinal lists") {
    // P_-(X_{N+1}) is all polynomials of degree < N, P(X_{N+1}) those of degree <= N.
    for (std::size_t n = 2; n <= 5; ++n) {
        INFO("N+1 = " << n);
        PSpaceBasis in = internal_space(testing::ones(n));
        PSpaceBasis ce = central_space(testing::ones(n));
        CHECK(in.hilbert() == std::vector<std::size_t>(n - 1, 1));
        CHECK(ce.hilbert() == std::vector<std::size_t>(n, 1));
    }
}

TEST_CASE("two-dimensional running example") {
    VectorList x = testing::fig1();
    PSpaceBasis in = internal_space(x);
    REQUIRE(in.dimension() == 1);
    CHECK(in.basis()[0] == MultiPoly::constant(2, 1));
    PSpaceBasis ce = central_space(x);
    CHECK(ce.hilbert() == std::vector<std::size_t>{1, 2});
    CHECK(ce.contains(MultiPoly::variable(2, 0)));
    CHECK_FALSE(in.contains(MultiPoly::variable(2, 0)));
}

TEST_CASE("scaling a vector keeps the internal space") {
    VectorList scaled(2, {{1, 0}, {0, 1}, {2, 2}});
    CHECK(internal_space(scaled).dimension() == internal_space(testing::fig1()).dimension());
    CHECK(interior_lattice_points(scaled).size() > interior_lattice_points(testing::fig1()).size());
}

TEST_CASE("coloops force a trivial internal space") {
    VectorList y(2, {{1, 0}, {0, 1}, {0, 1}});
    CHECK(internal_space(y).dimension() == 0);
    CHECK(central_space(y).dimension() == 2);
}

TEST_CASE("dimensions agree with brute-force counts") {
    for (const auto& [name, x] : testing::suite()) {
        INFO(name);
        CHECK(central_space(x).dimension() == testing::count_bases(x));
        CHECK(internal_space(x).dimension() == testing::interior_points_oracle(x).size());
    }
}

TEST_CASE("internal space is contained in the central space") {
    for (const auto& [name, x] : testing::suite()) {
        INFO(name);
        PSpaceBasis in = internal_space(x), ce = central_space(x);
        for (const auto& p : in.basis()) CHECK(ce.contains(p));
    }
}

TEST_CASE("coordinates and combine are inverse") {
    PSpaceBasis in = internal_space(testing::suite()[13].list);
    RatVector c(in.dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(static_cast<long>(i * i) - 3, 7);
    auto back = in.coordinates(in.combine(c));
    REQUIRE(back);
    CHECK(*back == c);
}

TEST_CASE("multiplication by p_x and projection along x") {
    for (const auto& [name, x] : testing::suite()) {
        if (x.dim() < 2 || has_coloop(x)) continue;
        PSpaceBasis in = internal_space(x);
        for (std::size_t i = 0; i < x.size(); ++i) {
            INFO(name << " pivot " << i);
            VectorList del = deletion(x, i);
            CHECK_NOTHROW(multiply_embed(internal_space(del), x[i], in));
            Contraction c = contract(x, i);
            PSpaceBasis child = internal_space(c.child);
            ProjectionSection s = project_section(in, c, child);
            for (std::size_t j = 0; j < child.dimension(); ++j) {
                RatVector e(child.dimension());
                e[j] = 1;
                MultiPoly lifted = in.combine(s.lift(e));
                CHECK(project_vars(lifted, c.quotient_map(), c.child.dim()) == child.basis()[j]);
            }
        }
    }
}

TEST_CASE("non-spanning input") {
    CHECK_THROWS_AS(internal_space(VectorList(2, {{1, 0}, {2, 0}})), PreconditionError);
    CHECK_THROWS_AS(central_space(VectorList(2, {})), PreconditionError);
}
