#include "trunctx/operators.hpp"

#include <cmath>
#include <utility>

namespace trunctx {

std::string to_string(OpKind kind) {
    switch (kind) {
        case OpKind::hilbert: return "hilbert";
        case OpKind::riesz: return "riesz";
        case OpKind::stacked: return "stacked";
        case OpKind::generalized: return "generalized";
    }
    return "unknown";
}

OpKind op_kind_from_string(const std::string& s) {
    if (s == "hilbert") return OpKind::hilbert;
    if (s == "riesz") return OpKind::riesz;
    if (s == "stacked") return OpKind::stacked;
    if (s == "generalized") return OpKind::generalized;
    throw ValidationError("unknown operator kind: " + s);
}

OpMatrix::OpMatrix(Eigen::MatrixXd entries, GridPtr source, GridPtr target, OpKind kind,
                   int axis)
    : entries_(std::move(entries)),
      source_(std::move(source)),
      target_(std::move(target)),
      kind_(kind),
      axis_(axis) {
    if (!source_ || !target_) throw ValidationError("OpMatrix: null grid");
    if (entries_.rows() != target_->size() || entries_.cols() != source_->size())
        throw ValidationError("OpMatrix: entry dimensions must match grids");
}

GridFn OpMatrix::apply(const GridFn& g) const {
    if (!same_grid(*g.grid, *source_))
        throw ValidationError("OpMatrix::apply: input not on the source grid");
    return GridFn(target_, entries_ * g.values);
}

OpMatrix OpMatrix::weighted_adjoint() const {
    const Eigen::VectorXd& wt = target_->weights();
    const Eigen::VectorXd& ws = source_->weights();
    Eigen::MatrixXd adj = ws.cwiseInverse().asDiagonal() *
                          (entries_.transpose() * wt.asDiagonal());
    return OpMatrix(std::move(adj), target_, source_, kind_, axis_);
}

OpMatrix assemble_truncated_hilbert(const GridPtr& source, const GridPtr& target) {
    if (source->dim() != 1 || target->dim() != 1)
        throw ValidationError("assemble_truncated_hilbert: 1-D grids required");
    if (!closures_disjoint(source->domain(), target->domain()))
        throw ValidationError(
            "assemble_truncated_hilbert: interval closures overlap; the principal-value "
            "case is not implemented");

    const auto& t = source->nodes();
    const auto& ws = source->weights();
    const auto& x = target->nodes();
    Eigen::MatrixXd m(target->size(), source->size());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            m(r, c) = ws[c] / (x(r, 0) - t(c, 0));
    return OpMatrix(std::move(m), source, target, OpKind::hilbert);
}

OpMatrix assemble_truncated_riesz(int axis, const GridPtr& source, const GridPtr& target) {
    const int n = source->dim();
    if (n != 2 || target->dim() != 2)
        throw ValidationError("assemble_truncated_riesz: 2-D box grids required");
    if (axis < 0 || axis >= n)
        throw ValidationError("assemble_truncated_riesz: axis out of range");
    if (!closures_disjoint(source->domain(), target->domain()))
        throw ValidationError("assemble_truncated_riesz: box closures overlap");

    const auto& y = source->nodes();
    const auto& ws = source->weights();
    const auto& x = target->nodes();
    Eigen::MatrixXd m(target->size(), source->size());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const double dx = x(r, 0) - y(c, 0);
            const double dy = x(r, 1) - y(c, 1);
            const double rr = std::sqrt(dx * dx + dy * dy);
            const double dj = axis == 0 ? dx : dy;
            m(r, c) = ws[c] * dj / (rr * rr * rr);
        }
    }
    return OpMatrix(std::move(m), source, target, OpKind::riesz, axis);
}

StackedOp::StackedOp(std::vector<OpMatrix> components) : components_(std::move(components)) {
    if (components_.empty()) throw ValidationError("StackedOp: at least one component");
    for (const auto& c : components_)
        if (!same_grid(*c.source(), *components_.front().source()))
            throw ValidationError("StackedOp: components must share the source grid");
}

Eigen::Index StackedOp::target_size() const {
    Eigen::Index n = 0;
    for (const auto& c : components_) n += c.target()->size();
    return n;
}

std::vector<GridFn> StackedOp::apply(const GridFn& g) const {
    std::vector<GridFn> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.apply(g));
    return out;
}

Eigen::VectorXd StackedOp::apply_flat(const Eigen::VectorXd& g) const {
    Eigen::VectorXd out(target_size());
    Eigen::Index at = 0;
    for (const auto& c : components_) {
        out.segment(at, c.target()->size()) = c.entries() * g;
        at += c.target()->size();
    }
    return out;
}

GridFn StackedOp::apply_adjoint_flat(const Eigen::VectorXd& stacked) const {
    if (stacked.size() != target_size())
        throw ValidationError("StackedOp::apply_adjoint_flat: stacked length mismatch");
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(source()->size());
    Eigen::Index at = 0;
    for (const auto& c : components_) {
        const OpMatrix adj = c.weighted_adjoint();
        acc += adj.entries() * stacked.segment(at, c.target()->size());
        at += c.target()->size();
    }
    return GridFn(source(), std::move(acc));
}

Eigen::VectorXd StackedOp::target_weights() const {
    Eigen::VectorXd w(target_size());
    Eigen::Index at = 0;
    for (const auto& c : components_) {
        w.segment(at, c.target()->size()) = c.target()->weights();
        at += c.target()->size();
    }
    return w;
}

StackedOp stack_components(std::vector<OpMatrix> components) {
    return StackedOp(std::move(components));
}

FlatOperator flatten(const OpMatrix& op) {
    FlatOperator f;
    f.matrix = op.entries();
    f.source_weights = op.source()->weights();
    f.target_weights = op.target()->weights();
    f.source = op.source();
    f.block_targets = {op.target()};
    f.block_sizes = {op.target()->size()};
    return f;
}

FlatOperator flatten(const StackedOp& op) {
    FlatOperator f;
    f.matrix.resize(op.target_size(), op.source()->size());
    Eigen::Index at = 0;
    for (const auto& c : op.components()) {
        f.matrix.middleRows(at, c.target()->size()) = c.entries();
        f.block_targets.push_back(c.target());
        f.block_sizes.push_back(c.target()->size());
        at += c.target()->size();
    }
    f.source_weights = op.source()->weights();
    f.target_weights = op.target_weights();
    f.source = op.source();
    return f;
}

}  // namespace trunctx
