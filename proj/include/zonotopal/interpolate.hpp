#pragma once

// Lattice interpolation with translates of a box spline: for a spanning totally
// unimodular X and any f supported on Z_-(X) there is exactly one p in P_-(X)
// with p(D)B_X == f on Z_-(X).

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "zonotopal/exact.hpp"
#include "zonotopal/poly.hpp"
#include "zonotopal/vector_list.hpp"

namespace zonotopal {

/// Finitely supported function on Z^d. Zeros are never stored.
class GridFunction {
public:
    explicit GridFunction(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    const std::map<IntVec, Rational>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    Rational at(const IntVec& z) const;
    void set(const IntVec& z, const Rational& v);
    void add(const IntVec& z, const Rational& v);

    GridFunction& operator+=(const GridFunction& o);
    GridFunction& operator*=(const Rational& c);
    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
    friend GridFunction operator*(const Rational& c, GridFunction a) { return a *= c; }
    friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a += Rational(-1) * b; }
    friend bool operator==(const GridFunction&, const GridFunction&) = default;

private:
    std::size_t dim_;
    std::map<IntVec, Rational> values_;
};

/// z -> f(z) - f(z - x).
GridFunction nabla(const GridFunction& f, const IntVec& x);
/// Fiber sums over z + Z x, indexed by quotient coordinates.
GridFunction sigma(const GridFunction& f, const Contraction& c);

/// z -> p(D)B_X(z) on Z_-(X). Throws PreconditionError if X is not spanning
/// and TU, or if p is not in P_-(X).
GridFunction gamma(const VectorList& x, const MultiPoly& p);
/// gamma for several polynomials, building B_X once.
std::vector<GridFunction> gamma_all(const VectorList& x, const std::vector<MultiPoly>& ps);

struct Interpolant {
    MultiPoly poly;
    std::vector<std::pair<IntVec, Rational>> certificate;  // (z, p(D)B_X(z)) over Z_-(X)
    RatVector internal_basis_coords;
};

/// Collocation over the canonical internal basis and the sorted interior points.
/// Throws PreconditionError for a non-spanning or non-TU list or values outside
/// Z_-(X).
Interpolant solve_direct(const VectorList& x, const GridFunction& f);

enum class PivotRule { first, last };

/// Deletion-contraction recursion, with the cardinal system as the rank-one base
/// case. Same preconditions as solve_direct.
Interpolant solve_recursive(const VectorList& x, const GridFunction& f, PivotRule rule = PivotRule::first);

/// n x n matrix with m_ij = D^{i-1} B_{X_{n+1}}(j), X_{n+1} = (1, ..., 1).
struct CardinalMatrix {
    std::size_t n = 0;
    RatMatrix entries;
};

CardinalMatrix cardinal_matrix(std::size_t n);

/// m_ij == m'_{i-1,j} - m'_{i-1,j-1} for i >= 2, with the columns of the smaller
/// matrix m' outside 1..n-1 read as zero.
bool satisfies_cardinal_recursion(const CardinalMatrix& m, const CardinalMatrix& smaller);

}  // namespace zonotopal
