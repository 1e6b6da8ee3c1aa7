#include "trunctx/grid.hpp"

#include <cmath>
#include <utility>

namespace trunctx {

bool closures_disjoint(const IntervalDomain& a, const IntervalDomain& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

bool closures_disjoint(const BoxDomain& a, const BoxDomain& b) {
    if (a.dim() != b.dim())
        throw ValidationError("closures_disjoint: dimension mismatch");
    for (int k = 0; k < a.dim(); ++k) {
        const auto& x = a.axes[static_cast<size_t>(k)];
        const auto& y = b.axes[static_cast<size_t>(k)];
        if (x.hi < y.lo || y.hi < x.lo) return true;
    }
    return false;
}

Grid::Grid(BoxDomain domain, std::vector<int> counts)
    : domain_(std::move(domain)), counts_(std::move(counts)) {
    domain_.validate();
    if (counts_.size() != static_cast<size_t>(domain_.dim()))
        throw ValidationError("Grid: one count per axis required");
    Eigen::Index total = 1;
    for (size_t k = 0; k < counts_.size(); ++k) {
        if (counts_[k] < 2)
            throw ValidationError("Grid: at least 2 cells per axis required");
        spacing_.push_back(domain_.axes[k].length() / counts_[k]);
        total *= counts_[k];
    }

    const int d = domain_.dim();
    nodes_.resize(total, d);
    weights_.resize(total);
    double cell = 1.0;
    for (double h : spacing_) cell *= h;

    std::vector<int> multi(static_cast<size_t>(d), 0);
    for (Eigen::Index i = 0; i < total; ++i) {
        for (int k = 0; k < d; ++k)
            nodes_(i, k) = axis_coord(k, multi[static_cast<size_t>(k)]);
        weights_[i] = cell;
        // advance multi-index, last axis fastest
        for (int k = d - 1; k >= 0; --k) {
            if (++multi[static_cast<size_t>(k)] < counts_[static_cast<size_t>(k)]) break;
            multi[static_cast<size_t>(k)] = 0;
        }
    }
}

Eigen::Index Grid::flat_index(const std::vector<int>& multi) const {
    if (multi.size() != counts_.size())
        throw ValidationError("Grid::flat_index: index rank mismatch");
    Eigen::Index idx = 0;
    for (size_t k = 0; k < counts_.size(); ++k) {
        if (multi[k] < 0 || multi[k] >= counts_[k])
            throw ValidationError("Grid::flat_index: index out of range");
        idx = idx * counts_[k] + multi[k];
    }
    return idx;
}

GridPtr make_grid(const IntervalDomain& domain, int count) {
    return make_grid(BoxDomain{{domain}}, {count});
}

GridPtr make_grid(const BoxDomain& domain, const std::vector<int>& counts) {
    return std::make_shared<Grid>(domain, counts);
}

bool same_grid(const Grid& a, const Grid& b) {
    if (a.dim() != b.dim() || a.counts() != b.counts()) return false;
    for (int k = 0; k < a.dim(); ++k) {
        if (a.domain().axes[static_cast<size_t>(k)].lo != b.domain().axes[static_cast<size_t>(k)].lo ||
            a.domain().axes[static_cast<size_t>(k)].hi != b.domain().axes[static_cast<size_t>(k)].hi)
            return false;
    }
    return true;
}

GridFn::GridFn(GridPtr g, Eigen::VectorXd v) : grid(std::move(g)), values(std::move(v)) {
    if (!grid) throw ValidationError("GridFn: null grid");
    if (values.size() != grid->size())
        throw ValidationError("GridFn: values length must equal node count");
}

double inner_product(const GridFn& u, const GridFn& v) {
    if (!u.grid || !v.grid || !same_grid(*u.grid, *v.grid))
        throw ValidationError("inner_product: grid mismatch");
    return (u.grid->weights().array() * u.values.array() * v.values.array()).sum();
}

double l2_norm(const GridFn& u) { return std::sqrt(inner_product(u, u)); }

GridFn forward_difference(const GridFn& u) {
    if (u.grid->dim() != 1)
        throw ValidationError("forward_difference: 1-D grid required");
    const Eigen::Index n = u.grid->size();
    if (n < 3) throw ValidationError("forward_difference: at least 3 nodes required");
    const double h = u.grid->spacing(0);
    Eigen::VectorXd d(n);
    for (Eigen::Index k = 0; k + 1 < n; ++k) d[k] = (u.values[k + 1] - u.values[k]) / h;
    d[n - 1] = d[n - 2];
    return GridFn(u.grid, std::move(d));
}

SobolevNorms sobolev_norms(const GridFn& u) {
    SobolevNorms out;
    out.l2 = l2_norm(u);
    const GridFn du = forward_difference(u);
    out.h1 = std::sqrt(out.l2 * out.l2 + inner_product(du, du));
    return out;
}

NormalizedPair normalize_pair(const IntervalDomain& I, const IntervalDomain& J) {
    I.validate();
    J.validate();
    if (!closures_disjoint(I, J))
        throw ValidationError("normalize_pair: closures of I and J must be disjoint");

    NormalizedPair out;
    const double len = J.length();
    if (I.hi < J.lo) {
        out.map = AffineMap1D{1.0 / len, -J.lo / len};
    } else {
        // I right of J: reflect so the image of I lands left of 0.
        out.map = AffineMap1D{-1.0 / len, J.hi / len};
        out.reflected = true;
    }
    const double a = out.map(I.lo);
    const double b = out.map(I.hi);
    out.source = IntervalDomain{std::min(a, b), std::max(a, b)};
    out.target = IntervalDomain{0.0, 1.0};
    return out;
}

GeometryParams geometry_params(const IntervalDomain& source_prime,
                               const IntervalDomain& target_prime) {
    constexpr double tol = 1e-12;
    if (std::abs(target_prime.lo) > tol || std::abs(target_prime.hi - 1.0) > tol ||
        !(source_prime.hi < 0.0))
        throw ValidationError("geometry_params: inputs must be normalized via normalize_pair");
    GeometryParams p;
    p.d = std::abs(source_prime.hi);
    p.l = source_prime.length();
    p.h1 = std::min(p.d / 4.0, 0.25);
    return p;
}

}  // namespace trunctx
