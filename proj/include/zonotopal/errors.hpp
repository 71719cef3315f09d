#pragma once

#include <stdexcept>
#include <string>

#include "zonotopal/exact.hpp"

namespace zonotopal {

/// A hypothesis of the interpolation problem is violated by the input:
/// a non-spanning or non-TU list, or values outside the interior lattice points.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that does not match the documented JSON schemas.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that holds for every valid input failed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// One-sided limits of p(D)B_X disagree at a wall point.
class DiscontinuityError : public std::runtime_error {
public:
    DiscontinuityError(Rational first, Rational second)
        : std::runtime_error("one-sided limits disagree: " + to_string(first) + " vs " + to_string(second)),
          first_limit(std::move(first)),
          second_limit(std::move(second)) {}

    Rational first_limit;
    Rational second_limit;
};

}  // namespace zonotopal
