#include "zonotopal/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace zonotopal {

Rational parse_rational(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    std::string s(first == std::string_view::npos ? std::string_view() : text.substr(first, last - first + 1));
    auto valid = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rational& r) { return sgn(r); }

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

namespace {

// Forward elimination to reduced echelon form in place, largest-magnitude pivots.
// Returns the pivot columns. `det_sign` tracks row swaps when non-null.
std::vector<std::size_t> eliminate(RatMatrix& m, int* det_sign = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        Rational best_abs = 0;
        for (std::size_t i = r; i < m.rows(); ++i) {
            Rational v = abs(m(i, c));
            if (v > best_abs) {
                best_abs = v;
                best = i;
            }
        }
        if (best == m.rows()) continue;
        if (best != r) {
            m.swap_rows(best, r);
            if (det_sign) *det_sign = -*det_sign;
        }
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
    RatMatrix out = m;
    auto p = eliminate(out);
    if (pivots) *pivots = std::move(p);
    return out;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix work = m;
    return eliminate(work).size();
}

Rational det(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = a.rows();
    RatMatrix m = a;
    Rational result = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        Rational best_abs = 0;
        for (std::size_t i = c; i < n; ++i) {
            Rational v = abs(m(i, c));
            if (v > best_abs) {
                best_abs = v;
                best = i;
            }
        }
        if (best == n) return 0;
        if (best != c) {
            m.swap_rows(best, c);
            result = -result;
        }
        result *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return result;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    RatMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: right-hand side length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = eliminate(aug);
    SolveResult result;
    if (!pivots.empty() && pivots.back() == a.cols()) {
        result.status = SolveStatus::no_solution;
        return result;
    }
    result.x.assign(a.cols(), Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) result.x[pivots[k]] = aug(k, a.cols());
    result.status = pivots.size() == a.cols() ? SolveStatus::unique : SolveStatus::non_unique;
    return result;
}

RatVector EchelonBasis::reduce(RatVector v) const {
    if (v.size() != n_) throw std::invalid_argument("EchelonBasis: vector length mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational f = v[pivots_[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
    }
    return v;
}

bool EchelonBasis::add(RatVector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < n_ && v[p] == 0) ++p;
    if (p == n_) return false;
    const Rational inv = 1 / v[p];
    for (auto& c : v) c *= inv;
    for (auto& row : rows_) {
        const Rational f = row[p];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

namespace {

std::vector<std::size_t> pivot_order(const std::vector<std::size_t>& pivots) {
    std::vector<std::size_t> order(pivots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots[a] < pivots[b]; });
    return order;
}

}  // namespace

std::vector<RatVector> EchelonBasis::rows() const {
    std::vector<RatVector> out;
    for (auto i : pivot_order(pivots_)) out.push_back(rows_[i]);
    return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
    std::vector<std::size_t> out;
    for (auto i : pivot_order(pivots_)) out.push_back(pivots_[i]);
    return out;
}

}  // namespace zonotopal
