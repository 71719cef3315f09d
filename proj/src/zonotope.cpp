#include "zonotopal/zonotope.hpp"

#include <algorithm>
#include <set>

#include "zonotopal/detail/subsets.hpp"
#include "zonotopal/errors.hpp"

namespace zonotopal {

IntVec primitive_direction(const RatVector& v) {
    Integer lcm = 1;
    for (const auto& c : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& c : v) {
        Integer k = c.get_num() * (lcm / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
        ints.push_back(k);
    }
    IntVec out(v.size(), 0);
    if (g == 0) return out;
    int s = 0;
    for (const auto& k : ints)
        if (k != 0) {
            s = sgn(k);
            break;
        }
    for (std::size_t i = 0; i < ints.size(); ++i) {
        Integer k = ints[i] / g * s;
        if (!k.fits_slong_p()) throw std::overflow_error("primitive_direction: coordinate overflow");
        out[i] = k.get_si();
    }
    return out;
}

std::vector<IntVec> hyperplane_normals(const VectorList& x) {
    const std::size_t d = x.dim();
    if (d == 0) return {};
    std::set<IntVec> normals;
    detail::for_each_subset(x.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        RatMatrix m(idx.size(), d);
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < d; ++c) m(r, c) = static_cast<long>(x[idx[r]][c]);
        auto kernel = nullspace(m);
        if (kernel.size() == 1) normals.insert(primitive_direction(kernel[0]));
        return true;
    });
    return {normals.begin(), normals.end()};
}

bool Zonotope::contains(const RatVector& u) const {
    for (const auto& h : halfspaces) {
        Rational v = dot(h.normal, u);
        if (v < h.lower || v > h.upper) return false;
    }
    return true;
}

bool Zonotope::contains_interior(const RatVector& u) const {
    for (const auto& h : halfspaces) {
        Rational v = dot(h.normal, u);
        if (v <= h.lower || v >= h.upper) return false;
    }
    return true;
}

bool Zonotope::contains_interior(const IntVec& u) const {
    for (const auto& h : halfspaces) {
        std::int64_t v = dot(h.normal, u);
        if (v <= h.lower || v >= h.upper) return false;
    }
    return true;
}

Zonotope hrep(const VectorList& x) {
    if (!spans(x)) throw PreconditionError("hrep: list does not span");
    Zonotope z;
    z.source = x;
    for (auto& n : hyperplane_normals(x)) {
        HalfSpace h;
        for (const auto& v : x.vectors()) {
            std::int64_t p = dot(n, v);
            (p > 0 ? h.upper : h.lower) += p;
        }
        h.normal = std::move(n);
        z.halfspaces.push_back(std::move(h));
    }
    return z;
}

bool LatticePointSet::contains(const IntVec& z) const {
    return std::binary_search(points.begin(), points.end(), z);
}

LatticePointSet interior_lattice_points(const VectorList& x) {
    const Zonotope z = hrep(x);
    const std::size_t d = x.dim();
    IntVec lo(d, 0), hi(d, 0);
    for (const auto& v : x.vectors())
        for (std::size_t j = 0; j < d; ++j) (v[j] > 0 ? hi[j] : lo[j]) += v[j];

    LatticePointSet out;
    IntVec u = lo;
    // Odometer over the bounding box; visits points in lexicographic order.
    while (true) {
        if (z.contains_interior(u)) out.points.push_back(u);
        std::size_t j = d;
        while (j > 0 && u[j - 1] == hi[j - 1]) {
            u[j - 1] = lo[j - 1];
            --j;
        }
        if (j == 0) break;
        ++u[j - 1];
    }
    return out;
}

std::vector<DeletionContractionPair> deletion_contraction_bijection(const VectorList& x, std::size_t i) {
    if (i >= x.size()) throw std::out_of_range("deletion_contraction_bijection: index out of range");
    if (!spans(x)) throw PreconditionError("deletion_contraction_bijection: list does not span");
    if (!is_totally_unimodular(x)) throw PreconditionError("deletion_contraction_bijection: list is not totally unimodular");
    if (is_zero(x[i])) throw PreconditionError("deletion_contraction_bijection: pivot is zero");
    if (is_coloop(x, i)) throw PreconditionError("deletion_contraction_bijection: pivot is a coloop");

    const LatticePointSet full = interior_lattice_points(x);
    const LatticePointSet deleted = interior_lattice_points(deletion(x, i));
    const Contraction c = contract(x, i);
    const LatticePointSet quotient = interior_lattice_points(c.child);

    std::vector<DeletionContractionPair> pairs;
    std::set<IntVec> images;
    for (const auto& z : full.points) {
        if (deleted.contains(z)) continue;
        IntVec img = c.project(z);
        if (!quotient.contains(img)) throw InternalError("deletion_contraction_bijection: image outside Z_-(X/x)");
        if (!images.insert(img).second) throw InternalError("deletion_contraction_bijection: map is not injective");
        pairs.push_back({z, std::move(img)});
    }
    if (images.size() != quotient.size()) throw InternalError("deletion_contraction_bijection: map is not surjective");
    return pairs;
}

}  // namespace zonotopal
