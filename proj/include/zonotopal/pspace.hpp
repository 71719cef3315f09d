#pragma once

// Central and internal P-spaces as explicit graded bases.
//
//   P(X)   = span{ p_Y : X \ Y has full rank }
//   P_-(X) = intersection over x in X of P(X \ x)
//
// Each degree is stored in reduced row echelon form over the graded-lex
// monomials of that degree, which makes the basis canonical.

#include <cstddef>
#include <optional>
#include <vector>

#include "zonotopal/exact.hpp"
#include "zonotopal/poly.hpp"
#include "zonotopal/vector_list.hpp"

namespace zonotopal {

enum class PSpaceKind { central, internal };

class PSpaceBasis {
public:
    struct DegreeBlock {
        int degree = 0;
        std::vector<Exponent> monomials;
        std::vector<RatVector> rows;       // reduced echelon rows
        std::vector<std::size_t> pivots;   // pivot column of each row
    };

    PSpaceBasis(PSpaceKind kind, VectorList source, std::vector<DegreeBlock> blocks);

    PSpaceKind kind() const { return kind_; }
    const VectorList& source() const { return source_; }
    std::size_t nvars() const { return source_.dim(); }
    const std::vector<MultiPoly>& basis() const { return basis_; }
    /// Dimension of each degree 0..max_degree.
    const std::vector<std::size_t>& hilbert() const { return hilbert_; }
    std::size_t dimension() const { return basis_.size(); }

    /// Coordinates of p in the basis, or nullopt if p is not in the space.
    std::optional<RatVector> coordinates(const MultiPoly& p) const;
    bool contains(const MultiPoly& p) const { return coordinates(p).has_value(); }
    MultiPoly combine(const RatVector& coords) const;

private:
    PSpaceKind kind_;
    VectorList source_;
    std::vector<DegreeBlock> blocks_;
    std::vector<MultiPoly> basis_;
    std::vector<std::size_t> hilbert_;
};

/// Throws PreconditionError for a non-spanning list.
PSpaceBasis central_space(const VectorList& x);
/// Throws PreconditionError for a non-spanning list.
PSpaceBasis internal_space(const VectorList& x);

/// Images of a basis of P_-(X \ x) under multiplication by p_x, each checked for
/// membership in `target` = P_-(X). Throws InternalError on failure.
std::vector<MultiPoly> multiply_embed(const PSpaceBasis& deleted, const IntVec& x, const PSpaceBasis& target);

struct ProjectionSection {
    std::vector<MultiPoly> images;  // projection of each P_-(X) basis element
    /// dim P_-(X) x dim P_-(X/x); column j holds P_-(X)-coordinates of a preimage
    /// of the j-th P_-(X/x) basis element.
    RatMatrix section;

    /// Preimage in P_-(X) coordinates of the element with the given P_-(X/x) coordinates.
    RatVector lift(const RatVector& child_coords) const;
};

/// Projects P_-(X) onto P_-(X/x) and builds a right inverse. Throws InternalError
/// when a projected image leaves P_-(X/x) or the projection is not surjective.
ProjectionSection project_section(const PSpaceBasis& internal, const Contraction& c, const PSpaceBasis& child_internal);

}  // namespace zonotopal
