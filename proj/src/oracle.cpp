#include "hjc/oracle.hpp"

#include <complex>
#include <vector>

namespace hjc::oracle {

double hermiticity_residual(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermiticity_residual: matrix not square");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

EigenSystem eig_hermitian(const Eigen::MatrixXcd& m, double herm_tol) {
  const double h = hermiticity_residual(m);
  if (h > herm_tol) {
    throw NonHermitianError(h, "eig_hermitian: input is not Hermitian (residual " +
                                   std::to_string(h) + ")");
  }
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: solver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianExponential::HermitianExponential(const Eigen::MatrixXcd& m, double herm_tol)
    : es_(eig_hermitian(m, herm_tol)) {}

Eigen::MatrixXcd HermitianExponential::operator()(double t) const {
  Eigen::VectorXcd phases(es_.values.size());
  for (Eigen::Index k = 0; k < es_.values.size(); ++k) {
    phases(k) = std::exp(std::complex<double>(0.0, -t * es_.values(k)));
  }
  return es_.vectors * phases.asDiagonal() * es_.vectors.adjoint();
}

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& m, double t, double herm_tol) {
  return HermitianExponential(m, herm_tol)(t);
}

Eigen::MatrixXcd restrict_blocks(const Eigen::MatrixXcd& m, int margin, int blocks) {
  if (blocks < 1 || m.rows() != m.cols() || m.rows() % blocks != 0) {
    throw std::invalid_argument("restrict_blocks: matrix is not square or not divisible into blocks");
  }
  const int d = static_cast<int>(m.rows()) / blocks;
  if (margin < 0 || margin >= d) throw std::invalid_argument("restrict_blocks: margin out of range");
  const int kept = d - margin;
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(kept * blocks));
  for (int b = 0; b < blocks; ++b)
    for (int n = 0; n < kept; ++n) idx.push_back(b * d + n);
  return m(idx, idx);
}

ResidualReport residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int margin,
                        int blocks, double tolerance, Metric metric) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("residual: operand dimensions differ");
  }
  const Eigen::MatrixXcd diff = restrict_blocks(a - b, margin, blocks);
  const double v = metric == Metric::MaxAbs ? diff.cwiseAbs().maxCoeff() : diff.norm();
  return {metric, v, margin, tolerance, v <= tolerance};
}

}  // namespace hjc::oracle
