#include "zonotopal/arrangement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zonotopal/detail/subsets.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/zonotope.hpp"

namespace zonotopal {

std::string to_string(const SignVector& s) {
    std::string out;
    for (auto c : s) out += c > 0 ? '+' : (c < 0 ? '-' : '0');
    return out;
}

namespace {

std::vector<IntVec> distinct_normals(const std::vector<IntVec>& normals) {
    std::set<IntVec> out;
    for (const auto& n : normals)
        if (!is_zero(n)) out.insert(primitive_direction(to_rational(n)));
    return {out.begin(), out.end()};
}

SignVector signs_of(const std::vector<IntVec>& normals, const RatVector& u) {
    SignVector s(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) s[i] = static_cast<std::int8_t>(sign(dot(normals[i], u)));
    return s;
}

std::size_t rank_of_rows(std::size_t dim, const std::vector<IntVec>& rows) {
    RatMatrix m(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    return rank(m);
}

// Columns of an integer matrix whose span is the orthogonal complement of `normal`.
std::vector<IntVec> complement_basis(std::size_t dim, const IntVec& normal) {
    RatMatrix m(1, dim);
    for (std::size_t j = 0; j < dim; ++j) m(0, j) = static_cast<long>(normal[j]);
    std::vector<IntVec> cols;
    for (const auto& v : nullspace(m)) cols.push_back(primitive_direction(v));
    return cols;
}

// B^T eta for B given by its columns.
IntVec pull_back(const std::vector<IntVec>& columns, const IntVec& eta) {
    IntVec out(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) out[i] = dot(columns[i], eta);
    return out;
}

RatVector push_forward(std::size_t dim, const std::vector<IntVec>& columns, const RatVector& v) {
    RatVector out(dim);
    for (std::size_t i = 0; i < columns.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (columns[i][j] != 0) out[j] += v[i] * static_cast<long>(columns[i][j]);
    return out;
}

std::vector<RatVector> sorted_by_signs(const std::vector<IntVec>& normals, const std::vector<RatVector>& points) {
    std::map<SignVector, RatVector> keyed;
    for (const auto& p : points) keyed.emplace(signs_of(normals, p), p);
    std::vector<RatVector> out;
    for (auto& [k, p] : keyed) out.push_back(p);
    return out;
}

}  // namespace

std::vector<RatVector> tope_points(std::size_t dim, const std::vector<IntVec>& normals) {
    const std::vector<IntVec> ns = distinct_normals(normals);
    if (ns.empty()) return {RatVector(dim)};
    const std::size_t r = rank_of_rows(dim, ns);

    if (r < dim) {
        // The arrangement is a cylinder over its lineality space; work in the
        // span of the normals instead.
        std::vector<IntVec> cols;
        for (const auto& n : ns) {
            cols.push_back(n);
            if (rank_of_rows(dim, cols) < cols.size()) cols.pop_back();
        }
        std::vector<IntVec> local;
        for (const auto& n : ns) local.push_back(pull_back(cols, n));
        std::vector<RatVector> out;
        for (const auto& v : tope_points(r, local)) out.push_back(push_forward(dim, cols, v));
        return sorted_by_signs(ns, out);
    }

    if (dim == 1) return {RatVector{Rational(-1)}, RatVector{Rational(1)}};

    // Every tope is a pointed cone, so it is adjacent to one of its extreme
    // rays. Walk around each ray through the topes of the local arrangement.
    std::set<IntVec> rays;
    detail::for_each_subset(ns.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
        RatMatrix m(idx.size(), dim);
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t j = 0; j < dim; ++j) m(a, j) = static_cast<long>(ns[idx[a]][j]);
        auto kernel = nullspace(m);
        if (kernel.size() == 1) rays.insert(primitive_direction(kernel[0]));
        return true;
    });

    std::map<SignVector, RatVector> found;
    for (const auto& ray : rays) {
        std::vector<IntVec> through;
        for (const auto& n : ns)
            if (dot(n, ray) == 0) through.push_back(n);
        const auto local = tope_points(dim, through);
        for (int s : {1, -1}) {
            RatVector r0 = to_rational(ray);
            for (auto& c : r0) c *= s;
            for (const auto& w : local) {
                Rational eps = 1;
                for (const auto& n : ns) {
                    Rational b = abs(dot(n, w));
                    Rational a = abs(dot(n, r0));
                    if (a != 0 && b != 0) eps = std::min(eps, Rational(a / (2 * b)));
                }
                RatVector p = r0;
                for (std::size_t j = 0; j < dim; ++j) p[j] += eps * w[j];
                found.emplace(signs_of(ns, p), std::move(p));
            }
        }
    }
    std::vector<RatVector> out;
    for (auto& [k, p] : found) out.push_back(std::move(p));
    return out;
}

Integer region_count(std::size_t dim, const std::vector<IntVec>& normals) {
    std::vector<IntVec> ns = distinct_normals(normals);
    if (ns.empty()) return 1;
    if (dim == 1) return 2;
    if (dim == 2) return Integer(static_cast<long>(2 * ns.size()));
    const IntVec h = ns.back();
    ns.pop_back();
    const auto cols = complement_basis(dim, h);
    std::vector<IntVec> restricted;
    for (const auto& n : ns) restricted.push_back(pull_back(cols, n));
    return region_count(dim, ns) + region_count(dim - 1, restricted);
}

IntVec generic_direction(std::size_t dim, const std::vector<IntVec>& normals) {
    for (std::int64_t m = 2;; ++m) {
        IntVec w(dim);
        std::int64_t power = 1;
        for (std::size_t j = 0; j < dim; ++j) {
            w[j] = power;
            power *= m;
        }
        bool ok = std::all_of(normals.begin(), normals.end(), [&](const IntVec& n) { return dot(n, w) != 0; });
        if (ok) return w;
    }
}

Arrangement::Arrangement(std::size_t dim, std::vector<IntVec> normals) : dim_(dim), normals_(std::move(normals)) {
    for (const auto& n : normals_)
        if (n.size() != dim_ || is_zero(n)) throw std::invalid_argument("Arrangement: bad normal");
    if (distinct_normals(normals_).size() != normals_.size())
        throw std::invalid_argument("Arrangement: normals must be pairwise non-parallel");
    for (auto& p : tope_points(dim_, normals_)) {
        SignVector s = signs_of(normals_, p);
        index_.emplace(s, topes_.size());
        topes_.push_back({std::move(s), std::move(p)});
    }
    const Integer expected = region_count(dim_, normals_);
    if (Integer(static_cast<unsigned long>(topes_.size())) != expected)
        throw InternalError("Arrangement: found " + std::to_string(topes_.size()) + " topes, expected " + expected.get_str());
}

SignVector Arrangement::signs_at(const RatVector& u) const { return signs_of(normals_, u); }

std::size_t Arrangement::tope_towards(const RatVector& u, const RatVector& direction) const {
    SignVector s = signs_of(normals_, u);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 0) continue;
        int v = sign(dot(normals_[i], direction));
        if (v == 0) throw std::invalid_argument("Arrangement::tope_towards: direction lies on a wall through the point");
        s[i] = v > 0 ? 1 : -1;
    }
    auto t = find(s);
    if (!t) throw InternalError("Arrangement::tope_towards: sign vector " + to_string(s) + " is not a tope");
    return *t;
}

std::optional<std::size_t> Arrangement::find(const SignVector& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Arrangement::on_wall(const RatVector& u) const {
    for (const auto& n : normals_)
        if (dot(n, u) == 0) return true;
    return false;
}

}  // namespace zonotopal
