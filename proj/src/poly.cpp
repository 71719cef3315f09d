#include "zonotopal/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace zonotopal {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Exponent> out;
    if (degree < 0) return out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponent e(nvars, 0);
    // Recursive fill, first variable takes the largest share first.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, degree);
    return out;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != degree) return false;
    return true;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::derivative(std::size_t i) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(i) == 0) continue;
        Exponent f = e;
        --f[i];
        out.add_term(f, c * e[i]);
    }
    return out;
}

MultiPoly linear_form(const IntVec& v) {
    MultiPoly p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Exponent e(v.size(), 0);
        e[i] = 1;
        p.add_term(e, static_cast<long>(v[i]));
    }
    return p;
}

MultiPoly product_form(std::size_t dim, const std::vector<IntVec>& vectors) {
    MultiPoly p = MultiPoly::constant(dim, 1);
    for (const auto& v : vectors) p = p * linear_form(v);
    return p;
}

MultiPoly product_form(const VectorList& y) { return product_form(y.dim(), y.vectors()); }

MultiPoly apply_diff(const MultiPoly& p, const MultiPoly& target) {
    if (p.nvars() != target.nvars()) throw std::invalid_argument("apply_diff: variable count mismatch");
    MultiPoly out(target.nvars());
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [et, ct] : target.terms()) {
            Exponent e(et.size());
            Rational factor = cp * ct;
            bool vanishes = false;
            for (std::size_t i = 0; i < e.size() && !vanishes; ++i) {
                if (ep[i] > et[i]) {
                    vanishes = true;
                    break;
                }
                e[i] = et[i] - ep[i];
                for (int k = 0; k < ep[i]; ++k) factor *= et[i] - k;
            }
            if (!vanishes) out.add_term(e, factor);
        }
    }
    return out;
}

MultiPoly project_vars(const MultiPoly& p, const IntMatrix& map, std::size_t target_vars) {
    if (map.size() != target_vars) throw std::invalid_argument("project_vars: map row count mismatch");
    for (const auto& row : map)
        if (row.size() != p.nvars()) throw std::invalid_argument("project_vars: map column count mismatch");
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        IntVec col(target_vars);
        for (std::size_t r = 0; r < target_vars; ++r) col[r] = map[r][i];
        images.push_back(linear_form(col));
    }
    MultiPoly out(target_vars);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        out += term;
    }
    return out;
}

Rational eval(const MultiPoly& p, const RatVector& point) {
    if (point.size() != p.nvars()) throw std::invalid_argument("eval: point dimension mismatch");
    Rational total = 0;
    Rational term;
    for (const auto& [e, c] : p.terms()) {
        term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

RatVector restrict_to_line(const MultiPoly& p, const RatVector& base, const RatVector& direction) {
    const std::size_t n = p.nvars();
    if (base.size() != n || direction.size() != n) throw std::invalid_argument("restrict_to_line: dimension mismatch");
    RatVector result(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
    for (const auto& [e, c] : p.terms()) {
        RatVector acc{c};
        for (std::size_t i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) {
                // acc *= (base_i + t direction_i)
                RatVector next(acc.size() + 1);
                for (std::size_t j = 0; j < acc.size(); ++j) {
                    next[j] += acc[j] * base[i];
                    next[j + 1] += acc[j] * direction[i];
                }
                acc = std::move(next);
            }
        for (std::size_t j = 0; j < acc.size(); ++j) result[j] += acc[j];
    }
    return result;
}

RatVector coefficients_over(const MultiPoly& p, const std::vector<Exponent>& monomials) {
    RatVector out(monomials.size());
    std::size_t matched = 0;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        auto it = p.terms().find(monomials[i]);
        if (it != p.terms().end()) {
            out[i] = it->second;
            ++matched;
        }
    }
    if (matched != p.terms().size()) throw std::invalid_argument("coefficients_over: polynomial has terms outside the monomial set");
    return out;
}

MultiPoly from_coefficients(const RatVector& coefs, const std::vector<Exponent>& monomials, std::size_t nvars) {
    MultiPoly p(nvars);
    for (std::size_t i = 0; i < monomials.size(); ++i) p.add_term(monomials[i], coefs[i]);
    return p;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = abs(c);
        bool constant_term = total_degree(e) == 0;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (constant_term || mag != 1) {
            std::string m = zonotopal::to_string(mag);
            out += (mag.get_den() != 1 && !constant_term) ? "(" + m + ")" : m;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += p.nvars() == 1 ? std::string("s") : "s" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

}  // namespace zonotopal
