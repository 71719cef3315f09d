#pragma once

// Exact piecewise-polynomial multivariate splines T_X and box splines B_X.
//
// T_X is built by repeated one-dimensional convolution
//
//     T_{Y,x}(u) = integral_0^inf T_Y(u - t x) dt,
//
// starting from T_C = chi_cone(C) / |det C| for a basis C. On every tope of the
// refined arrangement the new spline is a homogeneous polynomial; each piece is
// recovered exactly from point values obtained by integrating the previous
// level's pieces along rays, then checked on held-out points.
//
// B_X is never materialized: B_X(u) = sum_S (-1)^|S| T_X(u - a_S), where the
// shifts a_S are aggregated by position.

#include <cstddef>
#include <utility>
#include <vector>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/exact.hpp"
#include "zonotopal/poly.hpp"
#include "zonotopal/vector_list.hpp"

namespace zonotopal {

enum class SplineKind { multivariate, box };

struct Shift {
    IntVec point;          // a_S
    Integer multiplicity;  // sum of (-1)^|S| over subsets with this a_S
};

struct PiecewiseSpline {
    SplineKind kind = SplineKind::multivariate;
    VectorList source;  // sign-normalized, zero vectors removed
    IntVec translation;
    Arrangement arrangement;
    std::vector<MultiPoly> pieces;  // T_X on each tope
    int degree = 0;
    std::vector<Shift> shifts;  // box only
    IntVec perturbation;        // generic direction for limits at walls

    /// Piece on the tope that contains v + t * perturbation for small t > 0.
    const MultiPoly& piece_towards(const RatVector& v, const RatVector& direction) const;
};

/// T of the sign-normalized list. Throws PreconditionError for a non-spanning list.
PiecewiseSpline build_multivariate(const VectorList& x);
/// Throws PreconditionError for a non-spanning list.
PiecewiseSpline build_box(const VectorList& x);

/// p(D) T at u, as the limit from the perturbation side.
Rational eval_multivariate(const PiecewiseSpline& t, const MultiPoly& p, const RatVector& u);

/// p(D)B_X with the derivatives of every piece precomputed, for repeated evaluation.
class BoxDerivative {
public:
    BoxDerivative(const PiecewiseSpline& box, const MultiPoly& p);

    /// Value at u. Off the walls this is exact evaluation; on a wall the limits
    /// from the perturbation direction and its negative are compared and a
    /// DiscontinuityError is thrown if they differ.
    Rational operator()(const RatVector& u) const;

    /// Limit of p(D)B_X(u + t w) as t -> 0+. w must not lie on any wall through u.
    Rational limit(const RatVector& u, const RatVector& w) const;

    /// Limits from every tope of the local arrangement at u (a single value off the walls).
    std::vector<Rational> local_limits(const RatVector& u) const;

    /// Walls of the box spline through u, as normals.
    std::vector<IntVec> walls_through(const RatVector& u) const;

private:
    const PiecewiseSpline* box_;
    std::vector<MultiPoly> derived_;
};

Rational eval_box_derivative(const PiecewiseSpline& box, const MultiPoly& p, const RatVector& u);

/// Whether u lies on some wall of the box spline's piecewise structure.
bool on_box_wall(const PiecewiseSpline& box, const RatVector& u);

/// B_{X_{n+1}}(u) for the list of n+1 ones, by the truncated-power closed form.
Rational cardinal_bspline(std::size_t n_plus_1, const Rational& u);
/// k-th derivative of the closed form; requires k < n_plus_1 - 1 or u off the integers.
Rational cardinal_bspline_derivative(std::size_t n_plus_1, std::size_t k, const Rational& u);

struct ConvolutionRow {
    RatVector point;
    Rational lattice_sum;  // sum over integer lambda of B_X(u + lambda x)
    Rational contracted;   // B_{X/x} at the class of u
};

struct ConvolutionReport {
    std::vector<ConvolutionRow> rows;
    bool holds() const;
};

/// Checks sum_{lambda in Z} B_X(u + lambda x) == B_{X/x}(class of u) at each
/// sample. Throws PreconditionError if a sample lies on a wall across which one
/// of the box splines jumps, the list is not TU, or the pivot is zero.
ConvolutionReport check_convolution_identity(const VectorList& x, std::size_t i, const std::vector<RatVector>& samples);

}  // namespace zonotopal
