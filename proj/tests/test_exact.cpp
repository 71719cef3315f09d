#include <doctest.h>

#include "zonotopal/exact.hpp"

using namespace zonotopal;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational(" -4 ") == Rational(-4));
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK(to_string(parse_rational("-2/4")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(sign(Rational(-1, 3)) == -1);
    CHECK(sign(Rational(0)) == 0);
}

TEST_CASE("determinant and rank") {
    RatMatrix a = RatMatrix::from_rows({{2, 1}, {1, 1}}, 2);
    CHECK(det(a) == 1);
    CHECK(rank(a) == 2);
    RatMatrix s = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 3);
    CHECK(rank(s) == 1);
    CHECK_THROWS(det(s));
    CHECK(det(RatMatrix(0, 0)) == 1);
    RatMatrix p = RatMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, 3);
    CHECK(det(p) == 1);
    RatMatrix q = RatMatrix::from_rows({{0, 1}, {1, 0}}, 2);
    CHECK(det(q) == -1);
}

TEST_CASE("linear solve statuses") {
    RatMatrix a = RatMatrix::from_rows({{1, 1}, {1, -1}}, 2);
    auto r = solve(a, {Rational(3), Rational(1)});
    REQUIRE(r.status == SolveStatus::unique);
    CHECK(r.x == RatVector{2, 1});

    RatMatrix b = RatMatrix::from_rows({{1, 1}, {2, 2}}, 2);
    CHECK(solve(b, {Rational(1), Rational(3)}).status == SolveStatus::no_solution);
    auto nu = solve(b, {Rational(1), Rational(2)});
    CHECK(nu.status == SolveStatus::non_unique);
    CHECK(b * nu.x == RatVector{1, 2});
}

TEST_CASE("nullspace vectors are annihilated") {
    RatMatrix m = RatMatrix::from_rows({{1, 2, 3, 4}, {0, 1, 1, 1}}, 4);
    auto ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(m * v == RatVector(2));
}

TEST_CASE("echelon basis tracks the span") {
    EchelonBasis e(3);
    CHECK(e.add({1, 1, 0}));
    CHECK(e.add({0, 1, 1}));
    CHECK_FALSE(e.add({1, 2, 1}));
    CHECK(e.size() == 2);
    CHECK(e.reduce({1, 2, 1}) == RatVector(3));
    CHECK(e.add({0, 0, 5}));
    CHECK(e.full());
}

TEST_CASE("matrix product and transpose") {
    RatMatrix a = RatMatrix::from_rows({{1, 2}, {3, 4}}, 2);
    CHECK(a * RatMatrix::identity(2) == a);
    CHECK(a.transpose()(0, 1) == 3);
    CHECK(a * RatVector{1, 1} == RatVector{3, 7});
}
