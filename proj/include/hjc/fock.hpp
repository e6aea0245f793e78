#pragma once

// Truncated Fock space operators on span{|0>, ..., |d-1>}.
//
// Truncation convention: a^dagger annihilates the top level |d-1> (plain
// matrix transpose of a, no wrap-around). Identities that the truncation
// breaks at the top levels hold on a SafeSubspace, the span of the leading
// d - margin levels.

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "hjc/config.hpp"

namespace hjc {

using cplx = std::complex<double>;

class FockOperator {
 public:
  // Throws std::invalid_argument for a non-square, empty or non-finite matrix.
  explicit FockOperator(Eigen::MatrixXcd data);

  static FockOperator zero(int d);
  static FockOperator identity(int d);
  // |level><level|
  static FockOperator level_projector(int d, int level);

  int dim() const noexcept { return static_cast<int>(data_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return data_; }
  cplx operator()(int row, int col) const { return data_(row, col); }

  FockOperator adjoint() const { return FockOperator(data_.adjoint()); }
  bool is_diagonal() const;

  friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(cplx s, const FockOperator& a);
  friend FockOperator operator-(const FockOperator& a) { return FockOperator(-a.data_); }

 private:
  Eigen::MatrixXcd data_;
};

// Span of |0>, ..., |dim - 1 - margin>.
class SafeSubspace {
 public:
  // Throws std::invalid_argument unless 0 <= margin < dim.
  SafeSubspace(int dim, int margin);

  int dim() const noexcept { return dim_; }
  int margin() const noexcept { return margin_; }
  int kept() const noexcept { return dim_ - margin_; }

 private:
  int dim_;
  int margin_;
};

// a|n> = sqrt(n)|n-1>. Throws std::invalid_argument for d < 2.
FockOperator annihilation(int d);
// a^dagger|n> = sqrt(n+1)|n+1> for n < d-1, a^dagger|d-1> = 0.
FockOperator creation(int d);
// N = diag(0, 1, ..., d-1).
FockOperator number(int d);

// diag(f(0), ..., f(d-1)). Throws LevelError naming the first level where f
// is not finite.
FockOperator func_of_number(int d, const std::function<double(double)>& f);

// Inverts diagonal entries with |x| > tol.pinv_eps and maps the rest to 0.
// Throws std::invalid_argument for a non-diagonal operand.
FockOperator pseudo_diag_inverse(const FockOperator& op,
                                 const Tolerances& tol = kDefaultTolerances);

// max |a f(N) - f(N+1) a| on SafeSubspace(d, 1). Requires f finite on
// 0..d; throws LevelError otherwise.
double shift_identity_check(const std::function<double(double)>& f, int d);

// Leading (d - margin) x (d - margin) block. Throws std::invalid_argument if
// the subspace dimension differs from the operator's.
FockOperator restrict(const FockOperator& op, const SafeSubspace& s);

// 2^-52 scaled by the entry magnitude: the residual floor for identities
// that are exact in real arithmetic but pass through sqrt(n) * sqrt(n).
double roundoff_floor(double magnitude);

}  // namespace hjc
