#pragma once

// Verification paths that are structurally independent of the closed-form
// constructions: a dense Hermitian eigensolver, the eigendecomposition
// exponential, and residual metrics. Nothing here may depend on jc_core.

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hjc::oracle {

enum class Metric { MaxAbs, Frobenius };

struct ResidualReport {
  Metric metric = Metric::MaxAbs;
  double value = 0.0;
  int margin = 0;
  double tolerance = 0.0;
  bool pass = false;
};

struct EigenSystem {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // columns are eigenvectors
};

class NonHermitianError : public std::invalid_argument {
 public:
  NonHermitianError(double residual, const std::string& what)
      : std::invalid_argument(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

inline constexpr double kHermitianTolerance = 1e-10;

double hermiticity_residual(const Eigen::MatrixXcd& m);

// Throws NonHermitianError when max|m - m^dagger| exceeds herm_tol.
EigenSystem eig_hermitian(const Eigen::MatrixXcd& m, double herm_tol = kHermitianTolerance);

// exp(-i t m) for many t from a single eigendecomposition.
class HermitianExponential {
 public:
  explicit HermitianExponential(const Eigen::MatrixXcd& m, double herm_tol = kHermitianTolerance);
  Eigen::MatrixXcd operator()(double t) const;
  const EigenSystem& eigensystem() const noexcept { return es_; }

 private:
  EigenSystem es_;
};

// exp(-i t m) = V exp(-i t Lambda) V^dagger.
Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& m, double t,
                                double herm_tol = kHermitianTolerance);

// Keeps the leading (n/blocks - margin) indices of each of the `blocks`
// equal diagonal blocks. blocks = 2 restricts an operator on C^2 (x) F.
Eigen::MatrixXcd restrict_blocks(const Eigen::MatrixXcd& m, int margin, int blocks = 1);

// Difference a - b after restriction; pass iff value <= tolerance.
ResidualReport residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int margin,
                        int blocks = 1, double tolerance = 1e-12, Metric metric = Metric::MaxAbs);

}  // namespace hjc::oracle
