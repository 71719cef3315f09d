#include <doctest.h>

#include "support.hpp"
#include "zonotopal/vector_list.hpp"

using namespace zonotopal;

TEST_CASE("rank, spanning and bases") {
    VectorList x = testing::fig1();
    CHECK(rank(x) == 2);
    CHECK(spans(x));
    CHECK(bases(x).size() == 3);
    CHECK(rank_of(x, 0b001) == 1);
    CHECK_FALSE(spans(VectorList(2, {{1, 1}, {2, 2}})));
    CHECK_THROWS_AS(VectorList(2, {{1}}), std::invalid_argument);
}

TEST_CASE("basis count matches determinant enumeration") {
    for (const auto& [name, x] : testing::suite()) {
        INFO(name);
        CHECK(bases(x).size() == testing::count_bases(x));
    }
}

TEST_CASE("total unimodularity") {
    CHECK(is_totally_unimodular(testing::fig1()));
    for (const auto& [name, x] : testing::suite()) {
        INFO(name);
        CHECK(is_totally_unimodular(x));
    }
    auto w = tu_violation(VectorList(2, {{1, 0}, {0, 1}, {1, 2}}));
    REQUIRE(w);
    CHECK(w->determinant == 2);
    auto w2 = tu_violation(VectorList(2, {{1, 1}, {1, -1}}));
    REQUIRE(w2);
    CHECK(abs(w2->determinant) == 2);
    CHECK(w2->rows.size() == 2);
}

TEST_CASE("deletion and coloops") {
    VectorList x = testing::fig1();
    CHECK(deletion(x, 2) == VectorList(2, {{1, 0}, {0, 1}}));
    CHECK_FALSE(has_coloop(x));
    VectorList y = VectorList(2, {{1, 0}, {0, 1}, {0, 1}});
    CHECK(is_coloop(y, 0));
    CHECK_FALSE(is_coloop(y, 1));
    CHECK_THROWS_AS(deletion(x, 3), std::out_of_range);
}

TEST_CASE("contraction sends the pivot to zero with a unimodular map") {
    for (const auto& [name, x] : testing::suite()) {
        if (x.dim() < 2) continue;
        for (std::size_t i = 0; i < x.size(); ++i) {
            INFO(name << " pivot " << i);
            Contraction c = contract(x, i);
            std::vector<IntVec> rows = c.unimodular_map;
            RatMatrix t(rows.size(), x.dim());
            for (std::size_t a = 0; a < rows.size(); ++a)
                for (std::size_t b = 0; b < x.dim(); ++b) t(a, b) = static_cast<long>(rows[a][b]);
            CHECK(abs(det(t)) == 1);
            CHECK(is_zero(c.project(x[i])));
            CHECK(c.child.size() == x.size() - 1);
            CHECK(c.child.dim() == x.dim() - 1);
            CHECK(is_totally_unimodular(c.child));
        }
    }
    CHECK_THROWS_AS(contract(VectorList(2, {{2, 0}, {0, 1}}), 0), std::invalid_argument);
    CHECK_THROWS_AS(contract(VectorList(2, {{0, 0}, {0, 1}}), 0), std::invalid_argument);
}

TEST_CASE("Tutte polynomial of small graphs") {
    // K3: x^2 + x + y
    TuttePoly k3 = tutte(testing::graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    TuttePoly expect;
    expect.coefficients = {{{2, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}};
    CHECK(k3 == expect);

    // K4: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
    TuttePoly k4 = tutte(testing::suite()[13].list);
    TuttePoly e4;
    e4.coefficients = {{{3, 0}, 1}, {{2, 0}, 3}, {{1, 0}, 2}, {{1, 1}, 4}, {{0, 1}, 2}, {{0, 2}, 3}, {{0, 3}, 1}};
    CHECK(k4 == e4);
    CHECK(k4.evaluate(1, 1) == 16);
    CHECK(k4.evaluate(0, 1) == 6);

    for (const auto& [name, x] : testing::suite()) {
        INFO(name);
        CHECK(tutte(x) == tutte_corank_nullity(x));
    }
}

TEST_CASE("sign normalization") {
    VectorList x(2, {{-1, 0}, {0, 1}, {0, 0}, {1, -1}});
    SignNormalized s = sign_normalize(x);
    CHECK(s.zeros_dropped == 1);
    CHECK(s.list.size() == 3);
    for (const auto& v : s.list.vectors()) CHECK(dot(s.functional, v) > 0);
    IntVec t(2, 0);
    for (std::size_t k = 0; k < s.list.size(); ++k)
        if (s.flipped[k])
            for (std::size_t j = 0; j < 2; ++j) t[j] += x[s.source_index[k]][j];
    CHECK(t == s.translation);
}
