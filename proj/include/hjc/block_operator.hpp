#pragma once

// Operators on C^2 (x) F as 2x2 blocks of FockOperators.
//
// Flattening is atom-major: basis index = atom * d + n, with the excited
// atomic state |e> = (1, 0)^T as the upper block. So |e, n> -> n and
// |g, n> -> d + n.

#include <Eigen/Dense>

#include "hjc/fock.hpp"

namespace hjc {

class BlockOperator {
 public:
  // Throws std::invalid_argument unless all blocks share one dimension.
  BlockOperator(const FockOperator& b00, const FockOperator& b01, const FockOperator& b10,
                const FockOperator& b11);

  // Throws std::invalid_argument unless flat is 2d x 2d.
  static BlockOperator from_flat(Eigen::MatrixXcd flat, int d);
  static BlockOperator diag(const FockOperator& upper, const FockOperator& lower);
  static BlockOperator identity(int d);
  static BlockOperator zero(int d);

  int dim() const noexcept { return dim_; }  // Fock dimension d
  int size() const noexcept { return 2 * dim_; }
  const Eigen::MatrixXcd& flat() const noexcept { return flat_; }
  FockOperator block(int row, int col) const;

  BlockOperator adjoint() const { return from_flat(flat_.adjoint(), dim_); }

  friend BlockOperator operator+(const BlockOperator& a, const BlockOperator& b);
  friend BlockOperator operator-(const BlockOperator& a, const BlockOperator& b);
  friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b);
  friend BlockOperator operator*(cplx s, const BlockOperator& a);

 private:
  BlockOperator(Eigen::MatrixXcd flat, int d) : flat_(std::move(flat)), dim_(d) {}

  Eigen::MatrixXcd flat_;
  int dim_;
};

// Restricts every block to the leading (d - margin) levels.
BlockOperator restrict(const BlockOperator& op, const SafeSubspace& s);

// max |a - b| over the safe subspace of the given margin.
double residual(const BlockOperator& a, const BlockOperator& b, int margin);

// Flattened index of |atom, n>, atom 0 = e, 1 = g.
inline int flat_index(int atom, int n, int d) noexcept { return atom * d + n; }

}  // namespace hjc
