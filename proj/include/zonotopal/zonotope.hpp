#pragma once

// The zonotope Z(X) = { sum lambda_i x_i : 0 <= lambda_i <= 1 } in half-space
// form, and its interior lattice points.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zonotopal/exact.hpp"
#include "zonotopal/vector_list.hpp"

namespace zonotopal {

/// Primitive integer normals of the hyperplanes spanned by rank-(d-1) sublists,
/// first nonzero coordinate positive, sorted and deduplicated.
std::vector<IntVec> hyperplane_normals(const VectorList& x);

/// Clears denominators and divides by the content; first nonzero entry positive.
IntVec primitive_direction(const RatVector& v);

struct HalfSpace {
    IntVec normal;
    std::int64_t lower = 0;  // lower <= normal . u <= upper
    std::int64_t upper = 0;
};

struct Zonotope {
    VectorList source;
    std::vector<HalfSpace> halfspaces;

    bool contains(const RatVector& u) const;
    bool contains_interior(const RatVector& u) const;
    bool contains_interior(const IntVec& u) const;
};

/// Throws PreconditionError for a non-spanning list.
Zonotope hrep(const VectorList& x);

struct LatticePointSet {
    std::vector<IntVec> points;  // sorted lexicographically, unique

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    bool contains(const IntVec& z) const;
    friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;
};

/// Z_-(X). Throws PreconditionError for a non-spanning list.
LatticePointSet interior_lattice_points(const VectorList& x);

struct DeletionContractionPair {
    IntVec point;  // in Z_-(X) \ Z_-(X \ x)
    IntVec image;  // its class in Z_-(X/x), quotient coordinates
};

/// The bijection Z_-(X) \ Z_-(X \ x) -> Z_-(X/x), z -> class of z, checked by
/// enumeration. Throws PreconditionError if X is not TU or x is zero or a
/// coloop, InternalError if the map fails to be a bijection.
std::vector<DeletionContractionPair> deletion_contraction_bijection(const VectorList& x, std::size_t i);

}  // namespace zonotopal
