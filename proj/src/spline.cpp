#include "zonotopal/spline.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "zonotopal/errors.hpp"
#include "zonotopal/zonotope.hpp"

namespace zonotopal {

namespace {

struct Level {
    VectorList list;
    Arrangement arrangement;
    std::vector<MultiPoly> pieces;
};

const MultiPoly& piece_at(const Level& level, const RatVector& v) {
    SignVector s = level.arrangement.signs_at(v);
    if (std::find(s.begin(), s.end(), std::int8_t{0}) != s.end())
        throw InternalError("spline construction: evaluation point lies on a wall");
    auto t = level.arrangement.find(s);
    if (!t) throw InternalError("spline construction: sign vector " + to_string(s) + " is not a tope");
    return level.pieces[*t];
}

// integral_0^inf T_level(u0 - t x) dt
Rational ray_integral(const Level& level, const RatVector& u0, const IntVec& x) {
    std::vector<Rational> breaks{Rational(0)};
    for (const auto& n : level.arrangement.normals()) {
        std::int64_t nx = dot(n, x);
        if (nx == 0) continue;
        Rational t = dot(n, u0) / Rational(static_cast<long>(nx));
        if (t > 0) breaks.push_back(t);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const RatVector xr = to_rational(x);
    RatVector minus_x = xr;
    for (auto& c : minus_x) c = -c;
    auto point_at = [&](const Rational& t) {
        RatVector p = u0;
        for (std::size_t j = 0; j < p.size(); ++j) p[j] -= t * xr[j];
        return p;
    };

    Rational total = 0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const Rational& a = breaks[k];
        const Rational& b = breaks[k + 1];
        const MultiPoly& f = piece_at(level, point_at((a + b) / 2));
        if (f.is_zero()) continue;
        RatVector g = restrict_to_line(f, u0, minus_x);
        Rational pa = a, pb = b;
        for (std::size_t j = 0; j < g.size(); ++j) {
            total += g[j] * (pb - pa) / static_cast<long>(j + 1);
            pa *= a;
            pb *= b;
        }
    }
    if (!piece_at(level, point_at(breaks.back() + 1)).is_zero())
        throw InternalError("spline construction: ray does not leave the support");
    return total;
}

RatVector monomial_row(const std::vector<Exponent>& monomials, const RatVector& p) {
    RatVector row;
    row.reserve(monomials.size());
    for (const auto& e : monomials) {
        Rational v = 1;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) v *= p[i];
        row.push_back(v);
    }
    return row;
}

IntVec integral_multiple(const RatVector& v) {
    Integer lcm = 1;
    for (const auto& c : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    IntVec out;
    for (const auto& c : v) {
        Integer k = c.get_num() * (lcm / c.get_den());
        if (!k.fits_slong_p()) throw std::overflow_error("spline construction: sample coordinate overflow");
        out.push_back(k.get_si());
    }
    return out;
}

// Integer sample points inside the tope: K * c + delta with |delta|_inf <= radius,
// where K is large enough that no perturbation can cross a wall.
class TopeSampler {
public:
    TopeSampler(const Arrangement& arr, std::size_t tope, int degree, std::uint64_t seed)
        : arr_(arr), tope_(tope), center_(integral_multiple(arr.topes()[tope].sample)), rng_(seed) {
        radius_ = degree / 2 + 2;
        std::int64_t l1 = 1;
        for (const auto& n : arr.normals()) {
            std::int64_t s = 0;
            for (auto c : n) s += std::llabs(c);
            l1 = std::max(l1, s);
        }
        scale_ = radius_ * l1 + 1;
    }

    RatVector next() {
        std::uniform_int_distribution<std::int64_t> pick(-radius_, radius_);
        RatVector p(center_.size());
        for (std::size_t j = 0; j < p.size(); ++j) p[j] = static_cast<long>(scale_ * center_[j] + pick(rng_));
        if (arr_.signs_at(p) != arr_.topes()[tope_].signs) throw InternalError("TopeSampler: sample left its tope");
        return p;
    }

private:
    const Arrangement& arr_;
    std::size_t tope_;
    IntVec center_;
    std::mt19937_64 rng_;
    std::int64_t radius_ = 2;
    std::int64_t scale_ = 1;
};

constexpr int kHeldOut = 2;

MultiPoly fit_piece(const Level& previous, const Arrangement& arr, std::size_t tope, const IntVec& x, int degree,
                    std::size_t dim, std::uint64_t seed) {
    const auto monomials = monomials_of_degree(dim, degree);
    const std::size_t m = monomials.size();
    TopeSampler sampler(arr, tope, degree, seed);

    EchelonBasis span(m);
    std::vector<RatVector> rows;
    RatVector values;
    for (int attempt = 0; span.size() < m; ++attempt) {
        if (attempt > 200 * static_cast<int>(m) + 1000) throw InternalError("spline construction: no unisolvent sample set");
        RatVector p = sampler.next();
        RatVector row = monomial_row(monomials, p);
        if (!span.add(row)) continue;
        rows.push_back(std::move(row));
        values.push_back(ray_integral(previous, p, x));
    }
    SolveResult r = solve(RatMatrix::from_rows(rows, m), values);
    if (r.status != SolveStatus::unique) throw InternalError("spline construction: singular sample system");
    MultiPoly piece = from_coefficients(r.x, monomials, dim);
    for (int h = 0; h < kHeldOut; ++h) {
        RatVector p = sampler.next();
        if (eval(piece, p) != ray_integral(previous, p, x))
            throw InternalError("spline construction: held-out point disagrees with fitted piece");
    }
    return piece;
}

Level basis_level(const VectorList& basis) {
    const std::size_t d = basis.dim();
    Level level{basis, Arrangement(d, hyperplane_normals(basis)), {}};
    const RatMatrix c = basis.as_columns();
    const Rational weight = 1 / abs(det(c));
    for (const auto& t : level.arrangement.topes()) {
        SolveResult r = solve(c, t.sample);
        bool inside = std::all_of(r.x.begin(), r.x.end(), [](const Rational& v) { return v > 0; });
        level.pieces.push_back(inside ? MultiPoly::constant(d, weight) : MultiPoly(d));
    }
    return level;
}

Level convolve(const Level& previous, const IntVec& x) {
    std::vector<IntVec> vectors = previous.list.vectors();
    vectors.push_back(x);
    const std::size_t d = previous.list.dim();
    VectorList list(d, std::move(vectors));
    Arrangement arr(d, hyperplane_normals(list));
    const int degree = static_cast<int>(list.size()) - static_cast<int>(d);
    Level level{list, arr, {}};
    for (std::size_t t = 0; t < arr.topes().size(); ++t)
        level.pieces.push_back(fit_piece(previous, level.arrangement, t, x, degree, d, 0x5eed0000ULL + 131 * list.size() + t));
    return level;
}

}  // namespace

const MultiPoly& PiecewiseSpline::piece_towards(const RatVector& v, const RatVector& direction) const {
    return pieces[arrangement.tope_towards(v, direction)];
}

PiecewiseSpline build_multivariate(const VectorList& x) {
    if (!spans(x)) throw PreconditionError("build_multivariate: list does not span");
    const SignNormalized sn = sign_normalize(x);
    const VectorList& xn = sn.list;
    const std::size_t d = xn.dim();

    std::vector<IntVec> basis, rest;
    for (const auto& v : xn.vectors()) {
        basis.push_back(v);
        if (rank(VectorList(d, basis)) < basis.size()) {
            basis.pop_back();
            rest.push_back(v);
        }
    }
    Level level = basis_level(VectorList(d, basis));
    for (const auto& v : rest) level = convolve(level, v);

    PiecewiseSpline s;
    s.kind = SplineKind::multivariate;
    s.source = xn;
    s.translation = sn.translation;
    s.degree = static_cast<int>(xn.size()) - static_cast<int>(d);
    s.arrangement = std::move(level.arrangement);
    s.pieces = std::move(level.pieces);
    for (const auto& p : s.pieces)
        if (!p.is_homogeneous(s.degree)) throw InternalError("build_multivariate: piece is not homogeneous of degree N - d");
    s.perturbation = generic_direction(d, s.arrangement.normals());
    return s;
}

PiecewiseSpline build_box(const VectorList& x) {
    PiecewiseSpline s = build_multivariate(x);
    s.kind = SplineKind::box;
    std::map<IntVec, Integer> shifts{{IntVec(x.dim(), 0), Integer(1)}};
    for (const auto& v : s.source.vectors()) {
        std::map<IntVec, Integer> next = shifts;
        for (const auto& [a, c] : shifts) {
            IntVec b = a;
            for (std::size_t j = 0; j < b.size(); ++j) b[j] += v[j];
            next[b] -= c;
        }
        shifts = std::move(next);
    }
    for (auto& [a, c] : shifts)
        if (c != 0) s.shifts.push_back({a, c});
    return s;
}

Rational eval_multivariate(const PiecewiseSpline& t, const MultiPoly& p, const RatVector& u) {
    const MultiPoly& f = t.piece_towards(u, to_rational(t.perturbation));
    return eval(apply_diff(p, f), u);
}

BoxDerivative::BoxDerivative(const PiecewiseSpline& box, const MultiPoly& p) : box_(&box) {
    if (box.kind != SplineKind::box) throw std::invalid_argument("BoxDerivative: spline is not a box spline");
    derived_.reserve(box.pieces.size());
    for (const auto& f : box.pieces) derived_.push_back(apply_diff(p, f));
}

Rational BoxDerivative::limit(const RatVector& u, const RatVector& w) const {
    const std::size_t d = box_->source.dim();
    RatVector base = u;
    for (std::size_t j = 0; j < d; ++j) base[j] -= static_cast<long>(box_->translation[j]);
    Rational total = 0;
    RatVector v(d);
    for (const auto& s : box_->shifts) {
        for (std::size_t j = 0; j < d; ++j) v[j] = base[j] - static_cast<long>(s.point[j]);
        const MultiPoly& q = derived_[box_->arrangement.tope_towards(v, w)];
        if (q.is_zero()) continue;
        total += Rational(s.multiplicity) * eval(q, v);
    }
    return total;
}

std::vector<IntVec> BoxDerivative::walls_through(const RatVector& u) const {
    const std::size_t d = box_->source.dim();
    std::set<IntVec> walls;
    RatVector v(d);
    for (const auto& s : box_->shifts) {
        for (std::size_t j = 0; j < d; ++j) v[j] = u[j] - static_cast<long>(box_->translation[j] + s.point[j]);
        for (const auto& n : box_->arrangement.normals())
            if (dot(n, v) == 0) walls.insert(n);
    }
    return {walls.begin(), walls.end()};
}

Rational BoxDerivative::operator()(const RatVector& u) const {
    if (u.size() != box_->source.dim()) throw std::invalid_argument("BoxDerivative: point dimension mismatch");
    RatVector eps = to_rational(box_->perturbation);
    Rational a = limit(u, eps);
    if (walls_through(u).empty()) return a;
    for (auto& c : eps) c = -c;
    Rational b = limit(u, eps);
    if (a != b) throw DiscontinuityError(a, b);
    return a;
}

std::vector<Rational> BoxDerivative::local_limits(const RatVector& u) const {
    std::vector<Rational> out;
    for (const auto& w : tope_points(box_->source.dim(), walls_through(u))) out.push_back(limit(u, w));
    return out;
}

Rational eval_box_derivative(const PiecewiseSpline& box, const MultiPoly& p, const RatVector& u) {
    return BoxDerivative(box, p)(u);
}

bool on_box_wall(const PiecewiseSpline& box, const RatVector& u) {
    return !BoxDerivative(box, MultiPoly(box.source.dim())).walls_through(u).empty();
}

namespace {

Rational truncated_power(const Rational& t, std::size_t e) {
    if (t <= 0) return 0;
    Rational r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= t;
    return r;
}

}  // namespace

Rational cardinal_bspline_derivative(std::size_t n_plus_1, std::size_t k, const Rational& u) {
    if (n_plus_1 == 0) throw std::invalid_argument("cardinal_bspline: need at least one vector");
    const std::size_t n = n_plus_1 - 1;
    if (k > n) return 0;
    Integer nfact, falling = 1;
    mpz_fac_ui(nfact.get_mpz_t(), n);
    for (std::size_t i = 0; i < k; ++i) falling *= static_cast<unsigned long>(n - i);
    Rational total = 0;
    for (std::size_t j = 0; j <= n_plus_1; ++j) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), n_plus_1, j);
        Rational term = Rational(binom * falling) * truncated_power(u - static_cast<long>(j), n - k);
        total += (j % 2 == 0) ? term : Rational(-term);
    }
    return total / Rational(nfact);
}

Rational cardinal_bspline(std::size_t n_plus_1, const Rational& u) {
    return cardinal_bspline_derivative(n_plus_1, 0, u);
}

bool ConvolutionReport::holds() const {
    return std::all_of(rows.begin(), rows.end(), [](const ConvolutionRow& r) { return r.lattice_sum == r.contracted; });
}

ConvolutionReport check_convolution_identity(const VectorList& x, std::size_t i, const std::vector<RatVector>& samples) {
    if (i >= x.size()) throw std::out_of_range("check_convolution_identity: index out of range");
    if (!spans(x)) throw PreconditionError("check_convolution_identity: list does not span");
    if (!is_totally_unimodular(x)) throw PreconditionError("check_convolution_identity: list is not totally unimodular");
    if (is_zero(x[i])) throw PreconditionError("check_convolution_identity: pivot is zero");

    const PiecewiseSpline box = build_box(x);
    const Contraction c = contract(x, i);
    const PiecewiseSpline child = build_box(c.child);
    const Zonotope z = hrep(x);
    const MultiPoly one = MultiPoly::constant(x.dim(), 1);
    const MultiPoly child_one = MultiPoly::constant(c.child.dim(), 1);
    const RatVector xr = to_rational(x[i]);

    ConvolutionReport report;
    for (const auto& u : samples) {
        // Integer lambda with u + lambda x in Z(X).
        Rational lo, hi;
        bool bounded = false;
        for (const auto& h : z.halfspaces) {
            std::int64_t s = dot(h.normal, x[i]);
            if (s == 0) continue;
            Rational base = dot(h.normal, u);
            Rational a = (Rational(static_cast<long>(h.lower)) - base) / static_cast<long>(s);
            Rational b = (Rational(static_cast<long>(h.upper)) - base) / static_cast<long>(s);
            if (a > b) std::swap(a, b);
            if (!bounded || a > lo) lo = a;
            if (!bounded || b < hi) hi = b;
            bounded = true;
        }
        Integer first, last;
        mpz_cdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        mpz_fdiv_q(last.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());

        ConvolutionRow row{u, 0, 0};
        try {
            for (Integer lam = first - 1; lam <= last + 1; ++lam) {
                RatVector p = u;
                for (std::size_t j = 0; j < p.size(); ++j) p[j] += Rational(lam) * xr[j];
                row.lattice_sum += eval_box_derivative(box, one, p);
            }
            row.contracted = eval_box_derivative(child, child_one, c.project(u));
        } catch (const DiscontinuityError&) {
            throw PreconditionError("check_convolution_identity: sample lies on a wall where a box spline jumps");
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace zonotopal
