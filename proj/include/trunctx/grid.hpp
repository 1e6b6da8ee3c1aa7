#pragma once

#include <Eigen/Core>

#include <memory>
#include <vector>

#include "trunctx/errors.hpp"

namespace trunctx {

/// Open bounded interval (lo, hi), lo < hi.
struct IntervalDomain {
    double lo = 0.0;
    double hi = 1.0;

    double length() const { return hi - lo; }
    void validate() const {
        if (!(lo < hi)) throw ValidationError("IntervalDomain: requires lo < hi");
    }
};

/// Axis-aligned open box; one axis per dimension. Transform domains use
/// 1 or 2 axes; extension evaluation boxes may use 3.
struct BoxDomain {
    std::vector<IntervalDomain> axes;

    int dim() const { return static_cast<int>(axes.size()); }
    double volume() const {
        double v = 1.0;
        for (const auto& a : axes) v *= a.length();
        return v;
    }
    void validate() const {
        if (axes.empty() || axes.size() > 3)
            throw ValidationError("BoxDomain: dimension must be 1, 2 or 3");
        for (const auto& a : axes) a.validate();
    }
};

/// True if the closures of the two boxes are disjoint (separated along
/// at least one axis). Dimensions must match.
bool closures_disjoint(const BoxDomain& a, const BoxDomain& b);
bool closures_disjoint(const IntervalDomain& a, const IntervalDomain& b);

/// Midpoint-rule quadrature grid on a box. Nodes are cell centers,
/// weights are cell volumes; both are immutable after construction.
/// Flattening order is lexicographic with the last axis fastest.
class Grid {
public:
    Grid(BoxDomain domain, std::vector<int> counts);

    const BoxDomain& domain() const { return domain_; }
    int dim() const { return domain_.dim(); }
    const std::vector<int>& counts() const { return counts_; }
    Eigen::Index size() const { return weights_.size(); }

    /// Node coordinates, one row per node (size x dim).
    const Eigen::MatrixXd& nodes() const { return nodes_; }
    const Eigen::VectorXd& weights() const { return weights_; }

    double spacing(int axis) const { return spacing_.at(static_cast<size_t>(axis)); }
    /// k-th midpoint coordinate along an axis.
    double axis_coord(int axis, int k) const {
        return domain_.axes[static_cast<size_t>(axis)].lo + (k + 0.5) * spacing(axis);
    }
    Eigen::Index flat_index(const std::vector<int>& multi) const;

private:
    BoxDomain domain_;
    std::vector<int> counts_;
    std::vector<double> spacing_;
    Eigen::MatrixXd nodes_;
    Eigen::VectorXd weights_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(const IntervalDomain& domain, int count);
GridPtr make_grid(const BoxDomain& domain, const std::vector<int>& counts);

/// Structural equality: same domain bounds and counts.
bool same_grid(const Grid& a, const Grid& b);

/// Real-valued samples on a grid, one value per node.
struct GridFn {
    GridPtr grid;
    Eigen::VectorXd values;

    GridFn() = default;
    GridFn(GridPtr g, Eigen::VectorXd v);
};

/// Sample a callable at every grid node.
template <typename F>
GridFn sample(const GridPtr& grid, F&& f) {
    Eigen::VectorXd v(grid->size());
    for (Eigen::Index i = 0; i < grid->size(); ++i) {
        if (grid->dim() == 1)
            v[i] = f(grid->nodes()(i, 0));
        else if (grid->dim() == 2)
            v[i] = f(grid->nodes()(i, 0), grid->nodes()(i, 1));
        else
            v[i] = f(grid->nodes()(i, 0), grid->nodes()(i, 1), grid->nodes()(i, 2));
    }
    return GridFn(grid, std::move(v));
}

/// Weighted L2 pairing sum_k w_k u_k v_k. Grids must match structurally.
double inner_product(const GridFn& u, const GridFn& v);
double l2_norm(const GridFn& u);

struct SobolevNorms {
    double l2 = 0.0;
    double h1 = 0.0;
};

/// Forward-difference derivative on a 1-D grid; the last cell repeats the
/// previous difference so the result lives on the same grid.
GridFn forward_difference(const GridFn& u);

/// L2 and discrete H1 norms. H1 requires a 1-D grid with at least 3 nodes.
SobolevNorms sobolev_norms(const GridFn& u);

/// Invertible 1-D affine map x -> scale*x + offset.
struct AffineMap1D {
    double scale = 1.0;
    double offset = 0.0;

    double operator()(double x) const { return scale * x + offset; }
    double inverse(double y) const { return (y - offset) / scale; }
    AffineMap1D inverse_map() const { return {1.0 / scale, -offset / scale}; }
};

/// Result of normalizing an interval pair so that the target becomes (0,1)
/// and the source sits strictly to its left.
struct NormalizedPair {
    IntervalDomain source;                  // image of I, source.hi < 0
    IntervalDomain target{0.0, 1.0};        // always (0,1)
    AffineMap1D map;                        // applied to both intervals
    bool reflected = false;
};

/// Map (I, J) with disjoint closures to the reference configuration
/// J' = (0,1), I' to the left of 0. If I lies right of J a reflection is
/// composed in (and recorded).
NormalizedPair normalize_pair(const IntervalDomain& I, const IntervalDomain& J);

/// Distance/length/fattening parameters of a normalized pair.
struct GeometryParams {
    double d = 0.0;   // dist(I', J') = |I'.hi|
    double l = 0.0;   // length of I'
    double h1 = 0.0;  // min(d/4, 1/4)
};

/// Requires inputs already normalized (J' = (0,1), I'.hi < 0).
GeometryParams geometry_params(const IntervalDomain& source_prime,
                               const IntervalDomain& target_prime);

}  // namespace trunctx
