#include "zonotopal/interpolate.hpp"

#include <algorithm>
#include <memory>

#include "zonotopal/errors.hpp"
#include "zonotopal/pspace.hpp"
#include "zonotopal/spline.hpp"
#include "zonotopal/zonotope.hpp"

namespace zonotopal {

Rational GridFunction::at(const IntVec& z) const {
    auto it = values_.find(z);
    return it == values_.end() ? Rational(0) : it->second;
}

void GridFunction::set(const IntVec& z, const Rational& v) {
    if (z.size() != dim_) throw std::invalid_argument("GridFunction: point dimension mismatch");
    if (v == 0)
        values_.erase(z);
    else
        values_[z] = v;
}

void GridFunction::add(const IntVec& z, const Rational& v) {
    if (v != 0) set(z, at(z) + v);
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("GridFunction: dimension mismatch");
    for (const auto& [z, v] : o.values_) add(z, v);
    return *this;
}

GridFunction& GridFunction::operator*=(const Rational& c) {
    if (c == 0) {
        values_.clear();
        return *this;
    }
    for (auto& [z, v] : values_) v *= c;
    return *this;
}

GridFunction nabla(const GridFunction& f, const IntVec& x) {
    GridFunction out = f;
    for (const auto& [z, v] : f.values()) {
        IntVec w = z;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += x[j];
        out.add(w, -v);
    }
    return out;
}

GridFunction sigma(const GridFunction& f, const Contraction& c) {
    GridFunction out(c.child.dim());
    for (const auto& [z, v] : f.values()) out.add(c.project(z), v);
    return out;
}

namespace {

// Everything the solvers need about one list, built once.
struct ListData {
    VectorList list;
    bool coloop = false;
    std::unique_ptr<PSpaceBasis> internal;
    LatticePointSet points;
    std::unique_ptr<PiecewiseSpline> box;
};

class Workspace {
public:
    const ListData& get(const VectorList& x) {
        auto key = std::make_pair(x.dim(), x.vectors());
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
        auto data = std::make_unique<ListData>();
        data->list = x;
        data->coloop = has_coloop(x);
        data->internal = std::make_unique<PSpaceBasis>(internal_space(x));
        data->points = interior_lattice_points(x);
        if (!data->points.empty()) data->box = std::make_unique<PiecewiseSpline>(build_box(x));
        if (data->internal->dimension() != data->points.size())
            throw InternalError("dim P_-(X) = " + std::to_string(data->internal->dimension()) + " but |Z_-(X)| = " +
                                std::to_string(data->points.size()));
        return *cache_.emplace(key, std::move(data)).first->second;
    }

private:
    std::map<std::pair<std::size_t, std::vector<IntVec>>, std::unique_ptr<ListData>> cache_;
};

void require_tu_spanning(const VectorList& x, const char* who) {
    if (!spans(x)) throw PreconditionError(std::string(who) + ": list does not span");
    if (!is_totally_unimodular(x)) throw PreconditionError(std::string(who) + ": list is not totally unimodular");
}

void require_support(const ListData& data, const GridFunction& f, const char* who) {
    if (f.dim() != data.list.dim()) throw PreconditionError(std::string(who) + ": grid function has the wrong dimension");
    for (const auto& [z, v] : f.values())
        if (!data.points.contains(z))
            throw PreconditionError(std::string(who) + ": value given outside the interior lattice points");
}

GridFunction gamma_of(const ListData& data, const MultiPoly& p) {
    GridFunction out(data.list.dim());
    if (data.points.empty() || p.is_zero()) return out;
    BoxDerivative eval(*data.box, p);
    for (const auto& z : data.points.points) out.set(z, eval(to_rational(z)));
    return out;
}

Interpolant finish(const ListData& data, MultiPoly p) {
    Interpolant out;
    auto coords = data.internal->coordinates(p);
    if (!coords) throw InternalError("solver produced a polynomial outside P_-(X): " + to_string(p));
    out.internal_basis_coords = std::move(*coords);
    GridFunction g = gamma_of(data, p);
    for (const auto& z : data.points.points) out.certificate.emplace_back(z, g.at(z));
    out.poly = std::move(p);
    return out;
}

MultiPoly solve_collocation(const ListData& data, const GridFunction& f) {
    const auto& basis = data.internal->basis();
    const auto& pts = data.points.points;
    const std::size_t n = pts.size();
    if (n == 0) return MultiPoly(data.list.dim());
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        BoxDerivative eval(*data.box, basis[i]);
        for (std::size_t j = 0; j < n; ++j) a(j, i) = eval(to_rational(pts[j]));
    }
    RatVector rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = f.at(pts[j]);
    SolveResult r = solve(a, rhs);
    if (r.status != SolveStatus::unique) throw InternalError("collocation matrix is singular");
    return data.internal->combine(r.x);
}

MultiPoly solve_rank_one(const ListData& data, const GridFunction& f) {
    const SignNormalized sn = sign_normalize(data.list);
    const std::size_t m = sn.list.size();
    const std::int64_t t = sn.translation[0];
    const CardinalMatrix card = cardinal_matrix(m - 1);
    RatVector rhs(m - 1);
    for (std::size_t k = 1; k < m; ++k) rhs[k - 1] = f.at(IntVec{static_cast<std::int64_t>(k) + t});
    SolveResult r = solve(card.entries.transpose(), rhs);
    if (r.status != SolveStatus::unique) throw InternalError("cardinal matrix is singular");
    MultiPoly p(1);
    for (std::size_t i = 0; i < r.x.size(); ++i) p.add_term(Exponent{static_cast<int>(i)}, r.x[i]);
    return p;
}

std::size_t choose_pivot(const VectorList& x, PivotRule rule) {
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i]) && !is_coloop(x, i)) ok.push_back(i);
    if (ok.empty()) throw InternalError("no admissible pivot");
    return rule == PivotRule::first ? ok.front() : ok.back();
}

// h(z) = sum_{k >= 0} g(z - k x), computed fiber by fiber.
GridFunction invert_nabla(const GridFunction& g, const Contraction& c) {
    const IntVec& x = c.parent[c.pivot_index];
    const IntVec& last_row = c.unimodular_map.back();
    std::map<IntVec, std::map<std::int64_t, IntVec>> fibers;
    for (const auto& [z, v] : g.values()) fibers[c.project(z)].emplace(dot(last_row, z), z);
    GridFunction h(g.dim());
    for (const auto& [cls, pts] : fibers) {
        const std::int64_t t0 = pts.begin()->first;
        const std::int64_t t1 = pts.rbegin()->first;
        IntVec z = pts.begin()->second;
        Rational running = 0;
        for (std::int64_t t = t0; t <= t1; ++t) {
            running += g.at(z);
            h.set(z, running);
            for (std::size_t j = 0; j < z.size(); ++j) z[j] += x[j];
        }
        if (running != 0) throw InternalError("g is not in the kernel of the fiber sum");
    }
    return h;
}

MultiPoly solve_rec(Workspace& ws, const VectorList& x, const GridFunction& f, PivotRule rule) {
    const std::size_t d = x.dim();
    const ListData& data = ws.get(x);
    for (const auto& [z, v] : f.values())
        if (!data.points.contains(z)) throw InternalError("recursive data left the interior lattice points");
    if (data.coloop || data.points.empty()) return MultiPoly(d);
    if (d == 1) return solve_rank_one(data, f);

    const std::size_t i = choose_pivot(x, rule);
    const Contraction c = contract(x, i);
    const ListData& child = ws.get(c.child);

    const MultiPoly qbar = solve_rec(ws, c.child, sigma(f, c), rule);
    MultiPoly q(d);
    if (!qbar.is_zero()) {
        auto child_coords = child.internal->coordinates(qbar);
        if (!child_coords) throw InternalError("contracted solution left P_-(X/x)");
        const ProjectionSection section = project_section(*data.internal, c, *child.internal);
        q = data.internal->combine(section.lift(*child_coords));
    }

    const GridFunction g = f - gamma_of(data, q);
    const GridFunction h = invert_nabla(g, c);
    const VectorList deleted = deletion(x, i);
    const ListData& del = ws.get(deleted);
    for (const auto& [z, v] : h.values())
        if (!del.points.contains(z)) throw InternalError("nabla preimage is not supported on Z_-(X \\ x)");
    const MultiPoly r = solve_rec(ws, deleted, h, rule);
    return q + linear_form(x[i]) * r;
}

}  // namespace

GridFunction gamma(const VectorList& x, const MultiPoly& p) { return gamma_all(x, {p}).front(); }

std::vector<GridFunction> gamma_all(const VectorList& x, const std::vector<MultiPoly>& ps) {
    require_tu_spanning(x, "gamma");
    Workspace ws;
    const ListData& data = ws.get(x);
    std::vector<GridFunction> out;
    for (const auto& p : ps) {
        if (!data.internal->contains(p)) throw PreconditionError("gamma: polynomial is not in P_-(X): " + to_string(p));
        out.push_back(gamma_of(data, p));
    }
    return out;
}

Interpolant solve_direct(const VectorList& x, const GridFunction& f) {
    require_tu_spanning(x, "solve_direct");
    Workspace ws;
    const ListData& data = ws.get(x);
    require_support(data, f, "solve_direct");
    return finish(data, solve_collocation(data, f));
}

Interpolant solve_recursive(const VectorList& x, const GridFunction& f, PivotRule rule) {
    require_tu_spanning(x, "solve_recursive");
    Workspace ws;
    const ListData& data = ws.get(x);
    require_support(data, f, "solve_recursive");
    return finish(data, solve_rec(ws, x, f, rule));
}

CardinalMatrix cardinal_matrix(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cardinal_matrix: n must be positive");
    CardinalMatrix m{n, RatMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.entries(i, j) = cardinal_bspline_derivative(n + 1, i, Rational(static_cast<long>(j + 1)));
    return m;
}

bool satisfies_cardinal_recursion(const CardinalMatrix& m, const CardinalMatrix& smaller) {
    if (smaller.n + 1 != m.n) return false;
    auto small_at = [&](std::size_t i, std::size_t j) -> Rational {
        // 1-based column j of the smaller matrix, zero outside 1..n-1.
        if (j == 0 || j > smaller.n) return 0;
        return smaller.entries(i, j - 1);
    };
    for (std::size_t i = 1; i < m.n; ++i)
        for (std::size_t j = 1; j <= m.n; ++j)
            if (m.entries(i, j - 1) != small_at(i - 1, j) - small_at(i - 1, j - 1)) return false;
    return true;
}

}  // namespace zonotopal
