#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "trunctx/grid.hpp"

namespace trunctx {

enum class OpKind { hilbert, riesz, stacked, generalized };

std::string to_string(OpKind kind);
OpKind op_kind_from_string(const std::string& s);

/// Dense linear map between two grid-function spaces. Rows index target
/// nodes, columns index source nodes; kernel-based kinds carry the
/// quadrature weight of the source cell inside each entry.
class OpMatrix {
public:
    OpMatrix(Eigen::MatrixXd entries, GridPtr source, GridPtr target, OpKind kind,
             int axis = -1);

    const Eigen::MatrixXd& entries() const { return entries_; }
    const GridPtr& source() const { return source_; }
    const GridPtr& target() const { return target_; }
    OpKind kind() const { return kind_; }
    int axis() const { return axis_; }

    GridFn apply(const GridFn& g) const;

    /// Adjoint with respect to the weighted inner products on source and
    /// target: entries*[k][m] = entries[m][k] * w_target[m] / w_source[k].
    OpMatrix weighted_adjoint() const;

private:
    Eigen::MatrixXd entries_;
    GridPtr source_;
    GridPtr target_;
    OpKind kind_;
    int axis_;  // component axis for riesz/generalized kinds, else -1
};

/// Quadrature discretization of f |-> value of the truncated transform with
/// kernel 1/(x - t) on a target interval disjoint from the source interval.
OpMatrix assemble_truncated_hilbert(const GridPtr& source, const GridPtr& target);

/// Component j of the truncated Riesz transform on 2-D boxes with kernel
/// (x_j - y_j)/|x - y|^3; reduces to the Hilbert kernel in one dimension.
/// All normalization constants are dropped.
OpMatrix assemble_truncated_riesz(int axis, const GridPtr& source, const GridPtr& target);

/// Vertically stacked components sharing one source grid. The stacked norm
/// is Euclidean across components: ||S g||^2 = sum_j ||A_j g||^2.
class StackedOp {
public:
    explicit StackedOp(std::vector<OpMatrix> components);

    const std::vector<OpMatrix>& components() const { return components_; }
    const GridPtr& source() const { return components_.front().source(); }
    Eigen::Index target_size() const;

    std::vector<GridFn> apply(const GridFn& g) const;
    Eigen::VectorXd apply_flat(const Eigen::VectorXd& g) const;
    /// Adjoint action from the stacked target back to the source:
    /// sum of component adjoints applied to the corresponding slices.
    GridFn apply_adjoint_flat(const Eigen::VectorXd& stacked) const;

    Eigen::VectorXd target_weights() const;

private:
    std::vector<OpMatrix> components_;
};

StackedOp stack_components(std::vector<OpMatrix> components);

/// Uniform dense view used by the SVD and the control solvers: the matrix
/// with its source/target weight vectors, plus the block structure when the
/// operator is a stack.
struct FlatOperator {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd source_weights;
    Eigen::VectorXd target_weights;
    GridPtr source;
    std::vector<GridPtr> block_targets;   // one entry per stacked block
    std::vector<Eigen::Index> block_sizes;

    Eigen::VectorXd apply(const Eigen::VectorXd& g) const { return matrix * g; }
    Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& v) const {
        return source_weights.cwiseInverse().asDiagonal() *
               (matrix.transpose() * (target_weights.asDiagonal() * v));
    }
    double target_norm(const Eigen::VectorXd& v) const {
        return std::sqrt((target_weights.array() * v.array().square()).sum());
    }
    double source_norm(const Eigen::VectorXd& g) const {
        return std::sqrt((source_weights.array() * g.array().square()).sum());
    }
};

FlatOperator flatten(const OpMatrix& op);
FlatOperator flatten(const StackedOp& op);

}  // namespace trunctx
