#include "zonotopal/sampling.hpp"

#include <set>

#include "zonotopal/errors.hpp"

namespace zonotopal {

Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<long> den(2, 997);
    const long q = den(rng);
    const Rational width = hi - lo;
    // floor(width * q) steps of 1/q fit in the interval
    Integer steps = (width.get_num() * q) / width.get_den();
    if (steps < 2) return lo + width / 2;
    std::uniform_int_distribution<long> num(1, steps.get_si() - 1);
    Rational r = lo + Rational(num(rng), q);
    r.canonicalize();
    return r;
}

RatVector random_point_in_zonotope(const VectorList& x, std::mt19937_64& rng) {
    RatVector u(x.dim());
    for (const auto& v : x.vectors()) {
        Rational l = random_rational(rng, 0, 1);
        for (std::size_t j = 0; j < u.size(); ++j) u[j] += l * static_cast<long>(v[j]);
    }
    return u;
}

std::vector<RatVector> off_wall_points(const PiecewiseSpline& box, const VectorList& x, std::size_t count,
                                       std::mt19937_64& rng) {
    std::vector<RatVector> out;
    for (std::size_t tries = 0; out.size() < count; ++tries) {
        if (tries > 1000 * (count + 1)) throw InternalError("off_wall_points: sampling keeps hitting walls");
        RatVector u = random_point_in_zonotope(x, rng);
        if (!on_box_wall(box, u)) out.push_back(std::move(u));
    }
    return out;
}

std::vector<AffineWall> box_walls(const PiecewiseSpline& box) {
    std::set<std::pair<IntVec, Rational>> walls;
    for (const auto& n : box.arrangement.normals())
        for (const auto& s : box.shifts) {
            IntVec a = s.point;
            for (std::size_t j = 0; j < a.size(); ++j) a[j] += box.translation[j];
            walls.emplace(n, Rational(static_cast<long>(dot(n, a))));
        }
    std::vector<AffineWall> out;
    for (const auto& [n, c] : walls) out.push_back({n, c});
    return out;
}

RatVector random_point_on_wall(const AffineWall& wall, const VectorList& x, std::mt19937_64& rng) {
    RatVector w = random_point_in_zonotope(x, rng);
    Rational nn = 0;
    for (auto c : wall.normal) nn += static_cast<long>(c * c);
    const Rational shift = (dot(wall.normal, w) - wall.offset) / nn;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= shift * static_cast<long>(wall.normal[j]);
    return w;
}

}  // namespace zonotopal
