#pragma once

// Test lists and brute-force oracles shared by the unit, property and
// acceptance tests. Nothing here calls into the code under test except for
// the basic containers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zonotopal/exact.hpp"
#include "zonotopal/vector_list.hpp"

namespace testing {

using zonotopal::IntVec;
using zonotopal::Rational;
using zonotopal::RatVector;
using zonotopal::VectorList;

struct NamedList {
    std::string name;
    VectorList list;
};

inline VectorList ones(std::size_t n) { return VectorList(1, std::vector<IntVec>(n, IntVec{1})); }

inline VectorList fig1() { return VectorList(2, {{1, 0}, {0, 1}, {1, 1}}); }

/// Oriented incidence matrix of a graph with the row of the last vertex removed;
/// edge (a, b) becomes e_a - e_b.
inline VectorList graph(std::size_t vertices, const std::vector<std::pair<int, int>>& edges) {
    std::vector<IntVec> cols;
    for (auto [a, b] : edges) {
        IntVec v(vertices - 1, 0);
        if (a < static_cast<int>(vertices) - 1) v[a] += 1;
        if (b < static_cast<int>(vertices) - 1) v[b] -= 1;
        cols.push_back(v);
    }
    return VectorList(vertices - 1, cols);
}

/// The lists of the worked examples, every connected simple graph on at most
/// four vertices, a few multigraphs and an interval matrix.
inline std::vector<NamedList> suite() {
    return {
        {"X2", ones(2)},
        {"X3", ones(3)},
        {"X4", ones(4)},
        {"X5", ones(5)},
        {"fig1", fig1()},
        {"K2", graph(2, {{0, 1}})},
        {"P3", graph(3, {{0, 1}, {1, 2}})},
        {"K3", graph(3, {{0, 1}, {1, 2}, {0, 2}})},
        {"P4", graph(4, {{0, 1}, {1, 2}, {2, 3}})},
        {"K13", graph(4, {{0, 1}, {0, 2}, {0, 3}})},
        {"C4", graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})},
        {"paw", graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})},
        {"diamond", graph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}})},
        {"K4", graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
        {"K3_double_edge", graph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}})},
        {"K3_all_doubled", graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}})},
        {"C4_double_edge", graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}})},
        {"K4_double_edge", graph(4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
        {"K4_two_doubled", graph(4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 3}})},
        {"interval3", VectorList(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}})},
    };
}

/// Determinant by cofactor expansion over int64; fine for d <= 4.
inline std::int64_t det_small(const std::vector<IntVec>& cols) {
    const std::size_t n = cols.size();
    if (n == 0) return 1;
    if (n == 1) return cols[0][0];
    std::int64_t total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<IntVec> minor;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == c) continue;
            minor.push_back(IntVec(cols[k].begin() + 1, cols[k].end()));
        }
        const std::int64_t term = cols[c][0] * det_small(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::size_t count_bases(const VectorList& x) {
    std::size_t count = 0;
    for_each_combination(x.size(), x.dim(), [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVec> cols;
        for (auto i : idx) cols.push_back(x[i]);
        if (det_small(cols) != 0) ++count;
    });
    return count;
}

/// Solves the square system sum_k lambda_k cols[k] = rhs by Cramer's rule.
inline RatVector cramer(const std::vector<IntVec>& cols, const RatVector& rhs) {
    const std::int64_t d = det_small(cols);
    RatVector out;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        // Expand along column k replaced by rhs, using linearity in that column.
        Rational v = 0;
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            if (rhs[j] == 0) continue;
            auto m = cols;
            m[k] = IntVec(rhs.size(), 0);
            m[k][j] = 1;
            v += rhs[j] * Rational(static_cast<long>(det_small(m)));
        }
        out.push_back(v / Rational(static_cast<long>(d)));
    }
    return out;
}

/// Vertices of { lambda in [0,1]^N : X lambda = u }: a basis takes the solved
/// values, every other coordinate is 0 or 1.
inline std::vector<RatVector> fiber_vertices(const VectorList& x, const RatVector& u) {
    std::vector<RatVector> out;
    const std::size_t n = x.size(), d = x.dim();
    for_each_combination(n, d, [&](const std::vector<std::size_t>& basis) {
        std::vector<IntVec> cols;
        for (auto i : basis) cols.push_back(x[i]);
        if (det_small(cols) == 0) return;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (std::find(basis.begin(), basis.end(), i) == basis.end()) rest.push_back(i);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
            RatVector rhs = u;
            RatVector lambda(n);
            for (std::size_t k = 0; k < rest.size(); ++k)
                if (mask >> k & 1U) {
                    lambda[rest[k]] = 1;
                    for (std::size_t j = 0; j < d; ++j) rhs[j] -= static_cast<long>(x[rest[k]][j]);
                }
            RatVector lb = cramer(cols, rhs);
            bool ok = std::all_of(lb.begin(), lb.end(), [](const Rational& v) { return v >= 0 && v <= 1; });
            if (!ok) continue;
            for (std::size_t k = 0; k < d; ++k) lambda[basis[k]] = lb[k];
            out.push_back(lambda);
        }
    });
    return out;
}

/// u in Z(X): the fiber polytope is nonempty.
inline bool in_zonotope_oracle(const VectorList& x, const RatVector& u) { return !fiber_vertices(x, u).empty(); }

/// u in the interior of Z(X) (X spanning): some lambda in the open cube maps to
/// u, i.e. no coordinate is pinned to 0 or to 1 across all fiber vertices.
inline bool in_interior_oracle(const VectorList& x, const RatVector& u) {
    auto vs = fiber_vertices(x, u);
    if (vs.empty()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        bool above = false, below = false;
        for (const auto& v : vs) {
            above = above || v[i] > 0;
            below = below || v[i] < 1;
        }
        if (!above || !below) return false;
    }
    return true;
}

inline std::vector<IntVec> interior_points_oracle(const VectorList& x) {
    const std::size_t d = x.dim();
    IntVec lo(d, 0), hi(d, 0);
    for (const auto& v : x.vectors())
        for (std::size_t j = 0; j < d; ++j) (v[j] < 0 ? lo[j] : hi[j]) += v[j];
    std::vector<IntVec> out;
    IntVec z = lo;
    while (true) {
        if (in_interior_oracle(x, zonotopal::to_rational(z))) out.push_back(z);
        std::size_t j = 0;
        while (j < d && z[j] == hi[j]) z[j] = lo[j], ++j;
        if (j == d) break;
        ++z[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Cardinal B-spline of n ones by the Cox-de Boor recurrence.
inline Rational cox_de_boor(std::size_t n, const Rational& u) {
    if (n == 1) return (u > 0 && u <= 1) ? Rational(1) : Rational(0);
    Rational a = u * cox_de_boor(n - 1, u);
    Rational b = (Rational(static_cast<long>(n)) - u) * cox_de_boor(n - 1, u - 1);
    return (a + b) / static_cast<long>(n - 1);
}

struct MonteCarloEstimate {
    double value = 0;
    double standard_error = 0;
};

/// T_X(u) for a list in an open half-space by sampling the fiber
/// { lambda >= 0 : X lambda = u } over a bounding box in the non-basis coordinates.
inline MonteCarloEstimate fiber_volume_monte_carlo(const VectorList& x, const RatVector& u, std::size_t samples,
                                                   std::uint64_t seed) {
    const std::size_t n = x.size(), d = x.dim();
    std::vector<std::size_t> basis;
    for_each_combination(n, d, [&](const std::vector<std::size_t>& idx) {
        if (!basis.empty()) return;
        std::vector<IntVec> cols;
        for (auto i : idx) cols.push_back(x[i]);
        if (det_small(cols) != 0) basis = idx;
    });
    std::vector<IntVec> cols;
    for (auto i : basis) cols.push_back(x[i]);
    const double abs_det = std::fabs(static_cast<double>(det_small(cols)));
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(basis.begin(), basis.end(), i) == basis.end()) rest.push_back(i);

    // Functional positive on every vector bounds each lambda_j by ell.u / ell.x_j.
    IntVec ell(d);
    for (std::int64_t m = 2;; ++m) {
        std::int64_t p = 1;
        for (std::size_t j = 0; j < d; ++j) ell[j] = p, p *= m;
        bool ok = true;
        for (const auto& v : x.vectors()) ok = ok && zonotopal::dot(ell, v) > 0;
        if (ok) break;
    }
    const double lu = zonotopal::dot(ell, u).get_d();
    std::vector<double> width;
    double box = 1;
    for (auto r : rest) {
        width.push_back(lu / static_cast<double>(zonotopal::dot(ell, x[r])));
        box *= width.back();
    }

    // Inverse of the basis matrix in doubles.
    std::vector<std::vector<double>> inv(d, std::vector<double>(d));
    for (std::size_t j = 0; j < d; ++j) {
        RatVector e(d);
        e[j] = 1;
        RatVector col = cramer(cols, e);
        for (std::size_t k = 0; k < d; ++k) inv[k][j] = col[k].get_d();
    }
    std::vector<double> ud(d);
    for (std::size_t j = 0; j < d; ++j) ud[j] = u[j].get_d();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t hits = 0;
    std::vector<double> rhs(d), lam(rest.size());
    for (std::size_t s = 0; s < samples; ++s) {
        rhs = ud;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            lam[k] = unit(rng) * width[k];
            for (std::size_t j = 0; j < d; ++j) rhs[j] -= lam[k] * static_cast<double>(x[rest[k]][j]);
        }
        bool inside = true;
        for (std::size_t k = 0; k < d && inside; ++k) {
            double v = 0;
            for (std::size_t j = 0; j < d; ++j) v += inv[k][j] * rhs[j];
            inside = v >= 0;
        }
        hits += inside;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    MonteCarloEstimate est;
    est.value = box * p / abs_det;
    est.standard_error = box * std::sqrt(p * (1 - p) / static_cast<double>(samples)) / abs_det;
    return est;
}

}  // namespace testing
