#pragma once

/**
 * @file hopf_berry.hpp
 * @brief Classical two-level Hamiltonian H_K = [[z, conj(w)], [w, -z]] over
 *        K in {R, C, H, O} and its chart system.
 *
 * Chart I diagonalizes H_K everywhere except on the lower half of the w = 0
 * axis, chart II everywhere except on the upper half. On the overlap the two
 * unitaries differ by the diagonal transition function diag(conj(w), w)/|w|.
 * The spectral projector onto the +r eigenspace is defined globally.
 *
 * For K = O every product below involves only 1, w, conj(w) and reals, which
 * generate an associative subalgebra, so the fixed left-to-right evaluation
 * order of Matrix2K products is unambiguous.
 */

#include <array>

#include <Eigen/Dense>

#include "hjc/config.hpp"
#include "hjc/division_algebra.hpp"
#include "hjc/errors.hpp"
#include "hjc/types.hpp"

namespace hjc {

// 2x2 matrix over one division algebra.
class Matrix2K {
 public:
  explicit Matrix2K(AlgebraTag tag = AlgebraTag::R);
  // Throws std::invalid_argument unless all four entries share a tag.
  Matrix2K(AlgebraElement a00, AlgebraElement a01, AlgebraElement a10, AlgebraElement a11);

  static Matrix2K identity(AlgebraTag tag);
  static Matrix2K diag(AlgebraElement a, AlgebraElement b);
  static Matrix2K real(AlgebraTag tag, double a00, double a01, double a10, double a11);

  AlgebraTag tag() const noexcept { return tag_; }
  const AlgebraElement& operator()(int row, int col) const { return e_.at(2 * row + col); }

  // Conjugate transpose under the algebra's conjugation.
  Matrix2K adjoint() const;

  friend Matrix2K operator+(const Matrix2K& a, const Matrix2K& b);
  friend Matrix2K operator-(const Matrix2K& a, const Matrix2K& b);
  friend Matrix2K operator*(const Matrix2K& a, const Matrix2K& b);
  friend Matrix2K operator*(double s, const Matrix2K& a);

 private:
  AlgebraTag tag_;
  std::array<AlgebraElement, 4> e_;
};

// Largest absolute coefficient over all entries of a - b.
double max_abs_diff(const Matrix2K& a, const Matrix2K& b);
double max_abs(const Matrix2K& m);
double hermiticity_residual(const Matrix2K& m);
double unitarity_residual(const Matrix2K& u);
// Idempotency residual max|P^2 - P|.
double idempotency_residual(const Matrix2K& p);

// Embeds an R- or C-valued matrix as a complex 2x2. Throws for H and O.
Eigen::Matrix2cd to_complex(const Matrix2K& m);

// The point (w, z) of K x R, with r = sqrt(|w|^2 + z^2) cached.
class BasePoint {
 public:
  // Throws std::invalid_argument for non-finite z.
  BasePoint(AlgebraElement w, double z);

  const AlgebraElement& w() const noexcept { return w_; }
  double z() const noexcept { return z_; }
  double r() const noexcept { return r_; }
  double norm_w() const noexcept { return norm_w_; }
  AlgebraTag tag() const noexcept { return w_.tag(); }

  // r + z and r - z without cancellation.
  double r_plus_z() const noexcept;
  double r_minus_z() const noexcept;

 private:
  AlgebraElement w_;
  double z_;
  double norm_w_;
  double r_;
};

template <class Op, class Domain>
struct ChartDecomposition {
  Op unitary;
  Op diagonal;
  ChartTag chart;
  Domain domain;
};

using ClassicalDecomposition = ChartDecomposition<Matrix2K, PointClass>;
using MiddleDecomposition = ChartDecomposition<Eigen::Matrix2d, PointClass>;

Matrix2K build_hamiltonian(const BasePoint& p);

PointClass classify_point(const BasePoint& p, const Tolerances& tol = kDefaultTolerances);
PointClass classify_point(double norm_w, double z, const Tolerances& tol = kDefaultTolerances);

// Normalization prefactor 1/sqrt(2r(r +/- z)) of a chart; +inf where the
// chart is undefined. Large values mean the point sits close to that
// chart's string.
double chart_conditioning(const BasePoint& p, ChartTag chart,
                          const Tolerances& tol = kDefaultTolerances);

// U_I = [[r+z, -conj(w)], [w, r+z]] / sqrt(2r(r+z))
// U_II = [[conj(w), -r+z], [r-z, w]] / sqrt(2r(r-z))
// Throws DiracStringError where the chart is undefined.
Matrix2K chart_unitary(const BasePoint& p, ChartTag chart,
                       const Tolerances& tol = kDefaultTolerances);

// H_K = U diag(r, -r) U^dagger.
ClassicalDecomposition chart_decompose(const BasePoint& p, ChartTag chart,
                                       const Tolerances& tol = kDefaultTolerances);

Matrix2K reconstruct(const ClassicalDecomposition& d);

// Phi_K = diag(conj(w), w) / |w|, relating U_II = U_I Phi_K. Throws
// DiracStringError on the w = 0 axis.
Matrix2K transition_function(const BasePoint& p, const Tolerances& tol = kDefaultTolerances);

// P0 = diag(1, 0).
Matrix2K basic_projector(AlgebraTag tag);

// P(w, z) = [[r+z, conj(w)], [w, r-z]] / 2r. Defined everywhere but the origin.
Matrix2K projector(const BasePoint& p, const Tolerances& tol = kDefaultTolerances);

struct TwoStepFactors {
  Matrix2K outer;          // diag(1, w/|w|)
  Matrix2K middle;         // [[z, |w|], [|w|, -z]]
  Matrix2K outer_adjoint;  // diag(1, conj(w)/|w|)
};

// H_K = outer * middle * outer_adjoint. Throws DiracStringError when w = 0.
TwoStepFactors two_step_decompose(const BasePoint& p, const Tolerances& tol = kDefaultTolerances);

// Real orthogonal diagonalization of the string-bearing middle matrix
// [[z, |w|], [|w|, -z]] = U diag(r, -r) U^T.
MiddleDecomposition middle_diagonalize(double norm_w, double z, ChartTag chart,
                                       const Tolerances& tol = kDefaultTolerances);

// Unit vector (1, 1, ..., 1)/sqrt(n) of K; the direction used for w-slices.
AlgebraElement diagonal_direction(AlgebraTag tag);

}  // namespace hjc
