#pragma once

// Integer vector lists X in Z^d and the matroid operations the interpolation
// machinery needs: rank, total unimodularity, deletion, contraction with an
// explicit integral coordinate system on the quotient lattice, Tutte polynomial.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zonotopal/exact.hpp"

namespace zonotopal {

using IntVec = std::vector<std::int64_t>;
/// Row-major integer matrix, one IntVec per row.
using IntMatrix = std::vector<IntVec>;

std::int64_t dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVector& b);
RatVector to_rational(const IntVec& v);
IntVec apply(const IntMatrix& m, const IntVec& v);
RatVector apply(const IntMatrix& m, const RatVector& v);
bool is_zero(const IntVec& v);

/// An ordered list of N integer vectors in Z^d. Duplicates are allowed.
class VectorList {
public:
    VectorList() = default;
    /// Throws std::invalid_argument if some vector does not have `dim` coordinates.
    VectorList(std::size_t dim, std::vector<IntVec> vectors);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }
    const IntVec& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<IntVec>& vectors() const { return vectors_; }

    /// d x N matrix with the vectors as columns.
    RatMatrix as_columns() const;

    friend bool operator==(const VectorList&, const VectorList&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<IntVec> vectors_;
};

std::size_t rank(const VectorList& x);
/// Rank of the sublist selected by `mask` (bit i selects vector i; N <= 63).
std::size_t rank_of(const VectorList& x, std::uint64_t mask);
bool spans(const VectorList& x);

/// Index sets of all bases (d-element sublists of full rank), lexicographic.
std::vector<std::vector<std::size_t>> bases(const VectorList& x);

struct TuWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Rational determinant;
};

/// First square submatrix (rows of the d x N matrix, columns = vectors) whose
/// determinant lies outside {-1, 0, 1}, in order of increasing size.
std::optional<TuWitness> tu_violation(const VectorList& x);
bool is_totally_unimodular(const VectorList& x);

/// X \ x_i. Throws std::out_of_range.
VectorList deletion(const VectorList& x, std::size_t i);

/// Removing vector i lowers the rank. Throws std::out_of_range.
bool is_coloop(const VectorList& x, std::size_t i);
bool has_coloop(const VectorList& x);

/// X/x in integral coordinates on the quotient lattice. `unimodular_map` T has
/// det +-1 and sends the pivot to the last standard basis vector; the quotient
/// coordinates of a point u are the first d-1 entries of T u.
struct Contraction {
    VectorList parent;
    std::size_t pivot_index = 0;
    IntMatrix unimodular_map;
    VectorList child;

    /// The (d-1) x d matrix of quotient coordinates.
    IntMatrix quotient_map() const;
    IntVec project(const IntVec& u) const;
    RatVector project(const RatVector& u) const;
};

/// Throws std::out_of_range, or std::invalid_argument when the pivot is zero or
/// not primitive.
Contraction contract(const VectorList& x, std::size_t i);

/// Bivariate integer polynomial in (x, y); key (i, j) is the coefficient of x^i y^j.
struct TuttePoly {
    std::map<std::pair<int, int>, Integer> coefficients;

    Integer evaluate(const Integer& x, const Integer& y) const;
    friend bool operator==(const TuttePoly&, const TuttePoly&) = default;
};

/// Deletion-contraction recursion on the rank function.
TuttePoly tutte(const VectorList& x);
/// Sum over all 2^N sublists of (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
TuttePoly tutte_corank_nullity(const VectorList& x);

/// Result of flipping vectors so that all lie strictly on one side of the
/// hyperplane ker(functional). Zero vectors are dropped.
///
/// `translation` is the sum of the original vectors that were flipped; then
/// Z(X) = Z(normalized) + translation and B_X(u) = B_normalized(u - translation).
struct SignNormalized {
    VectorList list;
    IntVec translation;
    IntVec functional;
    std::size_t zeros_dropped = 0;
    std::vector<std::size_t> source_index;  // position in the original list
    std::vector<bool> flipped;
};

SignNormalized sign_normalize(const VectorList& x);

}  // namespace zonotopal
