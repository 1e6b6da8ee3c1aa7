#pragma once

#include <Eigen/Core>

#include "trunctx/grid.hpp"

namespace trunctx {

/// Normalization constant of the half-space Neumann kernel:
/// pi^((n+1)/2) / Gamma((n+1)/2), so kappa(1) = pi and kappa(2) = 2*pi.
double extension_kappa(int n);

/// Single-layer evaluation of the Neumann harmonic extension of boundary
/// data f into the upper half-space, sampled on an evaluation box grid.
/// The kernel is ln|x| for 1-D data and -1/|x| for 2-D data; its gradient
/// matches the unnormalized transform kernels exactly.
struct ExtensionField {
    GridFn boundary;        // data f on a 1-D or 2-D source grid
    GridPtr eval;           // (n+1)-dim box grid, closed upper half-space
    Eigen::VectorXd values; // u at eval nodes
    double kappa = 0.0;
};

/// Evaluate u = G * f on the evaluation grid. The evaluation box must lie
/// in the closed upper half-space; midpoint nodes never sit at height 0,
/// which keeps the sum away from the kernel singularity.
ExtensionField extend_neumann(const GridFn& f, const GridPtr& eval_grid);

/// Derivative trace of the extension at a given height over a trace grid
/// of the boundary dimension. The kernel is differentiated analytically
/// inside the quadrature sum; axis in [0, n) selects a horizontal
/// direction, axis == n the vertical one. At height 0 the trace domain
/// must keep its closure disjoint from the support of the boundary data.
GridFn derivative_trace(const ExtensionField& field, int axis, double height,
                        const GridPtr& trace_grid);

/// Max norm of the (2n+3)-point discrete Laplacian over interior evaluation
/// nodes; O(h^2) for the smooth harmonic extension away from the data.
double harmonicity_residual(const ExtensionField& field);

}  // namespace trunctx
