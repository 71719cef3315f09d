#pragma once

// Central hyperplane arrangements given by integer normals, and their topes
// (connected components of the complement).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zonotopal/exact.hpp"
#include "zonotopal/vector_list.hpp"

namespace zonotopal {

/// Entries in {-1, 0, +1}, one per normal.
using SignVector = std::vector<std::int8_t>;

std::string to_string(const SignVector& s);

struct Tope {
    SignVector signs;
    RatVector sample;  // interior point
};

class Arrangement {
public:
    Arrangement() = default;
    /// Enumerates the topes and certifies the count against the region count.
    /// Throws InternalError if the two disagree.
    Arrangement(std::size_t dim, std::vector<IntVec> normals);

    std::size_t dim() const { return dim_; }
    const std::vector<IntVec>& normals() const { return normals_; }
    const std::vector<Tope>& topes() const { return topes_; }

    SignVector signs_at(const RatVector& u) const;
    /// Tope containing u + t*direction for all small t > 0. Throws
    /// std::invalid_argument if the direction lies on a hyperplane through u.
    std::size_t tope_towards(const RatVector& u, const RatVector& direction) const;
    std::optional<std::size_t> find(const SignVector& s) const;
    bool on_wall(const RatVector& u) const;

private:
    std::size_t dim_ = 0;
    std::vector<IntVec> normals_;
    std::vector<Tope> topes_;
    std::map<SignVector, std::size_t> index_;
};

/// One interior point per tope of the central arrangement (normals need not be
/// distinct or span). Points are returned sorted by sign vector.
std::vector<RatVector> tope_points(std::size_t dim, const std::vector<IntVec>& normals);

/// Number of regions by deletion-restriction.
Integer region_count(std::size_t dim, const std::vector<IntVec>& normals);

/// Integer vector w with normal . w != 0 for every normal, from the family
/// (1, M, M^2, ...) with the smallest admissible M >= 2.
IntVec generic_direction(std::size_t dim, const std::vector<IntVec>& normals);

}  // namespace zonotopal
