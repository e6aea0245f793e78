#include "hjc/block_operator.hpp"

#include <stdexcept>
#include <string>

#include "hjc/oracle.hpp"

namespace hjc {

namespace {

void require_same_dim(const BlockOperator& a, const BlockOperator& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": block dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

BlockOperator::BlockOperator(const FockOperator& b00, const FockOperator& b01,
                             const FockOperator& b10, const FockOperator& b11)
    : dim_(b00.dim()) {
  if (b01.dim() != dim_ || b10.dim() != dim_ || b11.dim() != dim_) {
    throw std::invalid_argument("BlockOperator: blocks must share one Fock dimension");
  }
  flat_.resize(2 * dim_, 2 * dim_);
  flat_ << b00.matrix(), b01.matrix(), b10.matrix(), b11.matrix();
}

BlockOperator BlockOperator::from_flat(Eigen::MatrixXcd flat, int d) {
  if (d < 1 || flat.rows() != 2 * d || flat.cols() != 2 * d) {
    throw std::invalid_argument("BlockOperator::from_flat: expected a " + std::to_string(2 * d) +
                                "x" + std::to_string(2 * d) + " matrix");
  }
  if (!flat.allFinite()) throw std::invalid_argument("BlockOperator::from_flat: non-finite entry");
  return BlockOperator(std::move(flat), d);
}

BlockOperator BlockOperator::diag(const FockOperator& upper, const FockOperator& lower) {
  const FockOperator z = FockOperator::zero(upper.dim());
  return BlockOperator(upper, z, z, lower);
}

BlockOperator BlockOperator::identity(int d) {
  return from_flat(Eigen::MatrixXcd::Identity(2 * d, 2 * d), d);
}

BlockOperator BlockOperator::zero(int d) {
  return from_flat(Eigen::MatrixXcd::Zero(2 * d, 2 * d), d);
}

FockOperator BlockOperator::block(int row, int col) const {
  if (row < 0 || row > 1 || col < 0 || col > 1) throw std::out_of_range("BlockOperator::block");
  return FockOperator(flat_.block(row * dim_, col * dim_, dim_, dim_));
}

BlockOperator operator+(const BlockOperator& a, const BlockOperator& b) {
  require_same_dim(a, b, "operator+");
  return BlockOperator(a.flat_ + b.flat_, a.dim_);
}

BlockOperator operator-(const BlockOperator& a, const BlockOperator& b) {
  require_same_dim(a, b, "operator-");
  return BlockOperator(a.flat_ - b.flat_, a.dim_);
}

BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
  require_same_dim(a, b, "operator*");
  return BlockOperator(a.flat_ * b.flat_, a.dim_);
}

BlockOperator operator*(cplx s, const BlockOperator& a) {
  return BlockOperator(s * a.flat_, a.dim_);
}

BlockOperator restrict(const BlockOperator& op, const SafeSubspace& s) {
  if (s.dim() != op.dim()) throw std::invalid_argument("restrict: subspace dimension mismatch");
  return BlockOperator(restrict(op.block(0, 0), s), restrict(op.block(0, 1), s),
                       restrict(op.block(1, 0), s), restrict(op.block(1, 1), s));
}

double residual(const BlockOperator& a, const BlockOperator& b, int margin) {
  require_same_dim(a, b, "residual");
  return oracle::residual(a.flat(), b.flat(), margin, 2).value;
}

}  // namespace hjc
