#pragma once

// Exact rational scalars and dense rational matrices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace zonotopal {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

int sign(const Rational& r);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector column(std::size_t j) const;
    RatMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& x);

/// Reduced row echelon form. `pivots` receives the pivot column of each nonzero row.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RatMatrix& m);

/// Throws std::invalid_argument for non-square input.
Rational det(const RatMatrix& a);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<RatVector> nullspace(const RatMatrix& m);

enum class SolveStatus { unique, no_solution, non_unique };

struct SolveResult {
    SolveStatus status = SolveStatus::no_solution;
    RatVector x;  // set when unique, or the particular solution when non_unique
};

/// Solves a x = b exactly. For consistent underdetermined systems the particular
/// solution with all free variables zero is returned alongside non_unique.
/// Throws std::invalid_argument when a.rows() != b.size().
SolveResult solve(const RatMatrix& a, const RatVector& b);

/// Reduced echelon basis of a subspace of Q^n, grown one vector at a time.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t n) : n_(n) {}

    std::size_t ambient() const { return n_; }
    std::size_t size() const { return rows_.size(); }
    bool full() const { return rows_.size() == n_; }

    /// Adds v to the span; returns false if v was already in it.
    bool add(RatVector v);
    /// v reduced against the current rows; zero iff v lies in the span.
    RatVector reduce(RatVector v) const;

    /// Rows sorted by pivot column.
    std::vector<RatVector> rows() const;
    std::vector<std::size_t> pivots() const;

private:
    std::size_t n_;
    std::vector<RatVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace zonotopal
