#include "zonotopal/vector_list.hpp"

#include "zonotopal/detail/subsets.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace zonotopal {

std::int64_t dot(const IntVec& a, const IntVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVec& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rational(static_cast<long>(a[i])) * b[i];
    return s;
}

RatVector to_rational(const IntVec& v) {
    RatVector r;
    r.reserve(v.size());
    for (auto c : v) r.emplace_back(static_cast<long>(c));
    return r;
}

IntVec apply(const IntMatrix& m, const IntVec& v) {
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

RatVector apply(const IntMatrix& m, const RatVector& v) {
    RatVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
}

VectorList::VectorList(std::size_t dim, std::vector<IntVec> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
    for (const auto& v : vectors_)
        if (v.size() != dim_) throw std::invalid_argument("VectorList: vector length differs from dim");
}

RatMatrix VectorList::as_columns() const {
    RatMatrix m(dim_, vectors_.size());
    for (std::size_t j = 0; j < vectors_.size(); ++j)
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = static_cast<long>(vectors_[j][i]);
    return m;
}

std::size_t rank(const VectorList& x) { return rank(x.as_columns()); }

std::size_t rank_of(const VectorList& x, std::uint64_t mask) {
    std::vector<IntVec> picked;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (mask >> i & 1U) picked.push_back(x[i]);
    return rank(VectorList(x.dim(), std::move(picked)));
}

bool spans(const VectorList& x) { return rank(x) == x.dim(); }

using detail::for_each_subset;

std::vector<std::vector<std::size_t>> bases(const VectorList& x) {
    std::vector<std::vector<std::size_t>> out;
    for_each_subset(x.size(), x.dim(), [&](const std::vector<std::size_t>& idx) {
        RatMatrix m(x.dim(), x.dim());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < x.dim(); ++i) m(i, j) = static_cast<long>(x[idx[j]][i]);
        if (det(m) != 0) out.push_back(idx);
        return true;
    });
    return out;
}

std::optional<TuWitness> tu_violation(const VectorList& x) {
    const std::size_t d = x.dim();
    const std::size_t n = x.size();
    std::optional<TuWitness> found;
    for (std::size_t k = 1; k <= std::min(d, n) && !found; ++k) {
        for_each_subset(d, k, [&](const std::vector<std::size_t>& rows) {
            return for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
                RatMatrix m(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) m(a, b) = static_cast<long>(x[cols[b]][rows[a]]);
                Rational dt = det(m);
                if (dt == 0 || dt == 1 || dt == -1) return true;
                found = TuWitness{rows, cols, dt};
                return false;
            });
        });
    }
    return found;
}

bool is_totally_unimodular(const VectorList& x) { return !tu_violation(x).has_value(); }

VectorList deletion(const VectorList& x, std::size_t i) {
    if (i >= x.size()) throw std::out_of_range("deletion: index out of range");
    std::vector<IntVec> rest = x.vectors();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    return VectorList(x.dim(), std::move(rest));
}

bool is_coloop(const VectorList& x, std::size_t i) {
    if (i >= x.size()) throw std::out_of_range("is_coloop: index out of range");
    return rank(deletion(x, i)) < rank(x);
}

bool has_coloop(const VectorList& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (is_coloop(x, i)) return true;
    return false;
}

IntMatrix Contraction::quotient_map() const {
    return IntMatrix(unimodular_map.begin(), unimodular_map.end() - 1);
}

IntVec Contraction::project(const IntVec& u) const { return zonotopal::apply(quotient_map(), u); }

RatVector Contraction::project(const RatVector& u) const { return zonotopal::apply(quotient_map(), u); }

Contraction contract(const VectorList& x, std::size_t i) {
    if (i >= x.size()) throw std::out_of_range("contract: index out of range");
    const std::size_t d = x.dim();
    IntVec v = x[i];
    if (is_zero(v)) throw std::invalid_argument("contract: pivot is the zero vector");

    IntMatrix t(d, IntVec(d, 0));
    for (std::size_t k = 0; k < d; ++k) t[k][k] = 1;
    auto row_sub = [&](std::size_t target, std::size_t src, std::int64_t q) {
        v[target] -= q * v[src];
        for (std::size_t c = 0; c < d; ++c) t[target][c] -= q * t[src][c];
    };

    // Integer row reduction keeps t * pivot == v throughout.
    while (true) {
        std::size_t p = d;
        for (std::size_t k = 0; k < d; ++k)
            if (v[k] != 0 && (p == d || std::llabs(v[k]) < std::llabs(v[p]))) p = k;
        bool done = true;
        for (std::size_t k = 0; k < d; ++k) {
            if (k == p || v[k] == 0) continue;
            row_sub(k, p, v[k] / v[p]);
            done = false;
        }
        if (!done) continue;
        if (std::llabs(v[p]) != 1)
            throw std::invalid_argument("contract: pivot is not primitive in the lattice");
        std::swap(t[p], t[d - 1]);
        std::swap(v[p], v[d - 1]);
        if (v[d - 1] == -1) {
            v[d - 1] = 1;
            for (auto& c : t[d - 1]) c = -c;
        }
        break;
    }

    Contraction c;
    c.parent = x;
    c.pivot_index = i;
    c.unimodular_map = std::move(t);
    IntMatrix q = c.quotient_map();
    std::vector<IntVec> images;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (k != i) images.push_back(zonotopal::apply(q, x[k]));
    c.child = VectorList(d - 1, std::move(images));
    return c;
}

Integer TuttePoly::evaluate(const Integer& x, const Integer& y) const {
    Integer total = 0;
    for (const auto& [exps, coef] : coefficients) {
        Integer px, py;
        mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(exps.first));
        mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(exps.second));
        total += coef * px * py;
    }
    return total;
}

namespace {

class RankOracle {
public:
    explicit RankOracle(const VectorList& x) : x_(x) {
        if (x.size() > 63) throw std::invalid_argument("tutte: lists longer than 63 are unsupported");
    }
    std::size_t operator()(std::uint64_t mask) {
        auto it = cache_.find(mask);
        if (it != cache_.end()) return it->second;
        std::size_t r = rank_of(x_, mask);
        cache_.emplace(mask, r);
        return r;
    }

private:
    const VectorList& x_;
    std::unordered_map<std::uint64_t, std::size_t> cache_;
};

using Poly2 = std::map<std::pair<int, int>, Integer>;

void add_into(Poly2& acc, const Poly2& p) {
    for (const auto& [k, v] : p) acc[k] += v;
}

Poly2 shift(const Poly2& p, int dx, int dy) {
    Poly2 out;
    for (const auto& [k, v] : p) out[{k.first + dx, k.second + dy}] = v;
    return out;
}

Poly2 tutte_rec(RankOracle& r, std::uint64_t remaining, std::uint64_t contracted) {
    if (remaining == 0) return Poly2{{{0, 0}, Integer(1)}};
    std::uint64_t e = remaining & (~remaining + 1);
    std::uint64_t rest = remaining & ~e;
    const bool loop = r(contracted | e) == r(contracted);
    const bool coloop = r(remaining | contracted) != r(rest | contracted);
    if (loop) return shift(tutte_rec(r, rest, contracted), 0, 1);
    if (coloop) return shift(tutte_rec(r, rest, contracted | e), 1, 0);
    Poly2 out = tutte_rec(r, rest, contracted);
    add_into(out, tutte_rec(r, rest, contracted | e));
    return out;
}

Integer binomial(int n, int k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

TuttePoly clean(Poly2 p) {
    TuttePoly t;
    for (auto& [k, v] : p)
        if (v != 0) t.coefficients.emplace(k, std::move(v));
    return t;
}

}  // namespace

TuttePoly tutte(const VectorList& x) {
    RankOracle r(x);
    std::uint64_t all = x.size() == 0 ? 0 : (~std::uint64_t{0} >> (64 - x.size()));
    return clean(tutte_rec(r, all, 0));
}

TuttePoly tutte_corank_nullity(const VectorList& x) {
    RankOracle r(x);
    const std::size_t n = x.size();
    const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    const int total_rank = static_cast<int>(r(full));
    Poly2 acc;
    for (std::uint64_t a = 0; a <= full; ++a) {
        int ra = static_cast<int>(r(a));
        int corank = total_rank - ra;
        int nullity = __builtin_popcountll(a) - ra;
        // (x-1)^corank (y-1)^nullity expanded binomially
        for (int i = 0; i <= corank; ++i)
            for (int j = 0; j <= nullity; ++j) {
                Integer c = binomial(corank, i) * binomial(nullity, j);
                if ((corank - i + nullity - j) % 2 != 0) c = -c;
                acc[{i, j}] += c;
            }
        if (a == full) break;
    }
    return clean(std::move(acc));
}

SignNormalized sign_normalize(const VectorList& x) {
    const std::size_t d = x.dim();
    std::int64_t max_abs = 0;
    for (const auto& v : x.vectors())
        for (auto c : v) max_abs = std::max<std::int64_t>(max_abs, std::llabs(c));

    IntVec ell(d, 0);
    for (std::int64_t m = max_abs + 1;; ++m) {
        std::int64_t power = 1;
        for (std::size_t k = 0; k < d; ++k) {
            ell[k] = power;
            power *= m;
        }
        bool generic = std::all_of(x.vectors().begin(), x.vectors().end(),
                                   [&](const IntVec& v) { return is_zero(v) || dot(ell, v) != 0; });
        if (generic) break;
    }

    SignNormalized out;
    out.functional = ell;
    out.translation.assign(d, 0);
    std::vector<IntVec> kept;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const IntVec& v = x[i];
        if (is_zero(v)) {
            ++out.zeros_dropped;
            continue;
        }
        bool flip = dot(ell, v) < 0;
        IntVec w = v;
        if (flip) {
            for (std::size_t k = 0; k < d; ++k) {
                out.translation[k] += v[k];
                w[k] = -v[k];
            }
        }
        kept.push_back(std::move(w));
        out.source_index.push_back(i);
        out.flipped.push_back(flip);
    }
    out.list = VectorList(d, std::move(kept));
    return out;
}

}  // namespace zonotopal
