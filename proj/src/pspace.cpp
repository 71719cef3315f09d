#include "zonotopal/pspace.hpp"

#include <algorithm>
#include <set>

#include "zonotopal/errors.hpp"

namespace zonotopal {

namespace {

PSpaceBasis::DegreeBlock make_block(const EchelonBasis& ech, int degree, std::vector<Exponent> monomials) {
    PSpaceBasis::DegreeBlock b;
    b.degree = degree;
    b.monomials = std::move(monomials);
    b.rows = ech.rows();
    b.pivots = ech.pivots();
    return b;
}

std::uint64_t full_mask(std::size_t n) { return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)); }

// Degree blocks spanned by { p_Y : rank(X \ Y) == required_rank }, degrees 0..max_degree.
std::vector<PSpaceBasis::DegreeBlock> central_blocks(const VectorList& x, std::size_t required_rank, int max_degree) {
    const std::size_t d = x.dim();
    const std::size_t n = x.size();
    std::vector<std::vector<Exponent>> monomials;
    std::vector<EchelonBasis> ech;
    for (int k = 0; k <= max_degree; ++k) {
        monomials.push_back(monomials_of_degree(d, k));
        ech.emplace_back(monomials.back().size());
    }
    const std::uint64_t all = full_mask(n);
    for (std::uint64_t y = 0;; ++y) {
        const int k = __builtin_popcountll(y);
        if (k <= max_degree && !ech[static_cast<std::size_t>(k)].full() && rank_of(x, all & ~y) == required_rank) {
            std::vector<IntVec> picked;
            for (std::size_t i = 0; i < n; ++i)
                if (y >> i & 1U) picked.push_back(x[i]);
            MultiPoly p = product_form(d, picked);
            if (!p.is_zero()) ech[static_cast<std::size_t>(k)].add(coefficients_over(p, monomials[static_cast<std::size_t>(k)]));
        }
        if (y == all) break;
    }
    std::vector<PSpaceBasis::DegreeBlock> blocks;
    for (int k = 0; k <= max_degree; ++k)
        blocks.push_back(make_block(ech[static_cast<std::size_t>(k)], k, monomials[static_cast<std::size_t>(k)]));
    return blocks;
}

int truncation_degree(const VectorList& x) {
    return std::max(0, static_cast<int>(x.size()) - static_cast<int>(x.dim()));
}

}  // namespace

PSpaceBasis::PSpaceBasis(PSpaceKind kind, VectorList source, std::vector<DegreeBlock> blocks)
    : kind_(kind), source_(std::move(source)), blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
        hilbert_.push_back(b.rows.size());
        for (const auto& row : b.rows) basis_.push_back(from_coefficients(row, b.monomials, source_.dim()));
    }
    while (!hilbert_.empty() && hilbert_.back() == 0) hilbert_.pop_back();
}

std::optional<RatVector> PSpaceBasis::coordinates(const MultiPoly& p) const {
    if (p.nvars() != nvars()) return std::nullopt;
    if (p.degree() >= static_cast<int>(blocks_.size())) return std::nullopt;
    RatVector coords;
    for (const auto& b : blocks_) {
        MultiPoly part(nvars());
        for (const auto& [e, c] : p.terms())
            if (total_degree(e) == b.degree) part.add_term(e, c);
        RatVector v = coefficients_over(part, b.monomials);
        for (std::size_t k = 0; k < b.rows.size(); ++k) {
            Rational f = v[b.pivots[k]];
            coords.push_back(f);
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * b.rows[k][j];
        }
        if (std::any_of(v.begin(), v.end(), [](const Rational& c) { return c != 0; })) return std::nullopt;
    }
    return coords;
}

MultiPoly PSpaceBasis::combine(const RatVector& coords) const {
    if (coords.size() != basis_.size()) throw std::invalid_argument("PSpaceBasis::combine: coordinate count mismatch");
    MultiPoly p(nvars());
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) p += basis_[i] * coords[i];
    return p;
}

PSpaceBasis central_space(const VectorList& x) {
    if (!spans(x)) throw PreconditionError("central_space: list does not span");
    return PSpaceBasis(PSpaceKind::central, x, central_blocks(x, x.dim(), truncation_degree(x)));
}

PSpaceBasis internal_space(const VectorList& x) {
    if (!spans(x)) throw PreconditionError("internal_space: list does not span");
    const std::size_t d = x.dim();
    const int top = truncation_degree(x);

    std::set<IntVec> seen;
    std::vector<std::vector<PSpaceBasis::DegreeBlock>> spaces;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!seen.insert(x[i]).second) continue;
        spaces.push_back(central_blocks(deletion(x, i), d, top));
    }

    std::vector<PSpaceBasis::DegreeBlock> blocks;
    for (int k = 0; k <= top; ++k) {
        auto monomials = monomials_of_degree(d, k);
        const std::size_t m = monomials.size();
        // v lies in every space iff it is orthogonal to each space's annihilator.
        std::vector<RatVector> constraints;
        for (const auto& space : spaces) {
            const auto& b = space[static_cast<std::size_t>(k)];
            if (b.rows.empty()) {
                for (std::size_t j = 0; j < m; ++j) {
                    RatVector e(m);
                    e[j] = 1;
                    constraints.push_back(std::move(e));
                }
                continue;
            }
            for (auto& w : nullspace(RatMatrix::from_rows(b.rows, m))) constraints.push_back(std::move(w));
        }
        EchelonBasis ech(m);
        if (constraints.empty()) {
            for (std::size_t j = 0; j < m; ++j) {
                RatVector e(m);
                e[j] = 1;
                ech.add(std::move(e));
            }
        } else {
            for (auto& v : nullspace(RatMatrix::from_rows(constraints, m))) ech.add(std::move(v));
        }
        blocks.push_back(make_block(ech, k, std::move(monomials)));
    }
    return PSpaceBasis(PSpaceKind::internal, x, std::move(blocks));
}

std::vector<MultiPoly> multiply_embed(const PSpaceBasis& deleted, const IntVec& x, const PSpaceBasis& target) {
    const MultiPoly px = linear_form(x);
    std::vector<MultiPoly> out;
    for (const auto& b : deleted.basis()) {
        MultiPoly image = b * px;
        if (!target.contains(image))
            throw InternalError("multiply_embed: p * p_x left the internal space: " + to_string(image));
        out.push_back(std::move(image));
    }
    return out;
}

RatVector ProjectionSection::lift(const RatVector& child_coords) const {
    return section * child_coords;
}

ProjectionSection project_section(const PSpaceBasis& internal, const Contraction& c, const PSpaceBasis& child_internal) {
    const std::size_t child_vars = c.child.dim();
    const IntMatrix q = c.quotient_map();
    ProjectionSection out;
    std::vector<RatVector> image_coords;
    for (const auto& b : internal.basis()) {
        MultiPoly img = project_vars(b, q, child_vars);
        auto coords = child_internal.coordinates(img);
        if (!coords) throw InternalError("project_section: projection left P_-(X/x): " + to_string(img));
        image_coords.push_back(*coords);
        out.images.push_back(std::move(img));
    }
    const std::size_t rows = child_internal.dimension();
    const std::size_t cols = internal.dimension();
    RatMatrix a(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) a(i, j) = image_coords[j][i];
    out.section = RatMatrix(cols, rows);
    for (std::size_t t = 0; t < rows; ++t) {
        RatVector e(rows);
        e[t] = 1;
        SolveResult r = solve(a, e);
        if (r.status == SolveStatus::no_solution)
            throw InternalError("project_section: projection onto P_-(X/x) is not surjective");
        for (std::size_t j = 0; j < cols; ++j) out.section(j, t) = r.x[j];
    }
    return out;
}

}  // namespace zonotopal
