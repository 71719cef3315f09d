#pragma once

// Random rational test points for the self-checks: points inside a zonotope,
// points on the walls of a box spline, points off all walls.

#include <cstddef>
#include <random>
#include <vector>

#include "zonotopal/exact.hpp"
#include "zonotopal/spline.hpp"
#include "zonotopal/vector_list.hpp"

namespace zonotopal {

/// p/q with q uniform in [2, 997] and p/q uniform-ish in [lo, hi].
Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi);

/// sum lambda_i x_i with random rational lambda_i in (0, 1).
RatVector random_point_in_zonotope(const VectorList& x, std::mt19937_64& rng);

/// Points of the zonotope that lie on no wall of the box spline.
std::vector<RatVector> off_wall_points(const PiecewiseSpline& box, const VectorList& x, std::size_t count,
                                       std::mt19937_64& rng);

/// Affine hyperplane normal . u == offset.
struct AffineWall {
    IntVec normal;
    Rational offset;
};

/// Walls of the box spline's piecewise structure, in the original coordinates.
std::vector<AffineWall> box_walls(const PiecewiseSpline& box);

/// Random point of the wall near the zonotope of x.
RatVector random_point_on_wall(const AffineWall& wall, const VectorList& x, std::mt19937_64& rng);

}  // namespace zonotopal
