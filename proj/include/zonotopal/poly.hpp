#pragma once

// Multivariate polynomials with rational coefficients in s_1..s_d. The same
// type is used for elements of Sym(U) and for the differential operators p(D).

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zonotopal/exact.hpp"
#include "zonotopal/vector_list.hpp"

namespace zonotopal {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded lexicographic: lower total degree first, then lexicographically
/// larger exponent vectors first (so s_1 precedes s_2).
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of total degree `degree` in `nvars` variables, graded-lex order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GradedLex>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t i);
    static MultiPoly monomial(const Exponent& e, const Rational& c = 1);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int degree) const;
    Rational coefficient(const Exponent& e) const;

    /// Adds c * monomial(e), dropping the term if it cancels.
    void add_term(const Exponent& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const { return *this * Rational(-1); }

    /// Partial derivative in variable i.
    MultiPoly derivative(std::size_t i) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void check_same(const MultiPoly& o) const;

    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Sum v_i s_i.
MultiPoly linear_form(const IntVec& v);
/// Product of the linear forms of the vectors; the constant 1 for an empty list.
MultiPoly product_form(const VectorList& y);
MultiPoly product_form(std::size_t dim, const std::vector<IntVec>& vectors);

/// p(D) applied to target. Throws std::invalid_argument on variable-count mismatch.
MultiPoly apply_diff(const MultiPoly& p, const MultiPoly& target);

/// Image under the algebra map sending s_i to the linear form given by column i
/// of `map` (an m x d integer matrix); the result has m variables.
MultiPoly project_vars(const MultiPoly& p, const IntMatrix& map, std::size_t target_vars);

Rational eval(const MultiPoly& p, const RatVector& point);

/// Coefficients in t (ascending) of p(base + t * direction).
RatVector restrict_to_line(const MultiPoly& p, const RatVector& base, const RatVector& direction);

/// Coefficient vector over the given monomials; throws if p has other terms.
RatVector coefficients_over(const MultiPoly& p, const std::vector<Exponent>& monomials);
MultiPoly from_coefficients(const RatVector& coefs, const std::vector<Exponent>& monomials, std::size_t nvars);

/// Human-readable form such as "1 + (1/2)s1^2" (variables s1..sd, or s when d = 1).
std::string to_string(const MultiPoly& p);

}  // namespace zonotopal
