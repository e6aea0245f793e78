#include "hjc/grassmann.hpp"

#include <cmath>
#include <string>

#include "hjc/errors.hpp"
#include "hjc/hopf_berry.hpp"

namespace hjc {

LocalCoordinate local_coordinate(const JCParams& p, const Tolerances& tol) {
  p.validate();
  const int d = p.dim;
  const double th = p.theta;

  std::vector<double> shifts(static_cast<std::size_t>(d));
  std::vector<SectorEntry> bad;
  for (int n = 0; n < d; ++n) {
    shifts[static_cast<std::size_t>(n)] = radius_plus(n, th);
    if (shifts[static_cast<std::size_t>(n)] <= tol.sector_eps) {
      SectorEntry e;
      e.chart = ChartTag::I;
      e.row = 2;
      e.level = n;
      e.denominator = shifts[static_cast<std::size_t>(n)];
      e.singular = true;
      bad.push_back(e);
    }
  }
  if (!bad.empty()) {
    throw SingularSectorError(bad, "local_coordinate: R(n) + theta vanishes at level " +
                                       std::to_string(bad.front().level));
  }

  const FockOperator ad = creation(d);
  FockOperator left = func_of_number(d, [th](double n) { return 1.0 / radius_plus(n, th); }) * ad;
  FockOperator right = ad * func_of_number(d, [th](double n) { return 1.0 / radius_plus(n + 1, th); });
  const double two_form = (left - right).matrix().cwiseAbs().maxCoeff();
  return {std::move(right), std::move(left), th, std::move(shifts), two_form};
}

BlockOperator oike_projector(const FockOperator& z) {
  const int d = z.dim();
  const Eigen::MatrixXcd& zm = z.matrix();
  const Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(d, d) + zm.adjoint() * zm;
  // Hermitian positive definite.
  const Eigen::MatrixXcd inv = gram.llt().solve(Eigen::MatrixXcd::Identity(d, d));
  return BlockOperator(FockOperator(inv), FockOperator(inv * zm.adjoint()), FockOperator(zm * inv),
                       FockOperator(zm * inv * zm.adjoint()));
}

namespace {

Eigen::MatrixXcd chart_frame(const Eigen::MatrixXcd& z, double sign) {
  const int d = static_cast<int>(z.rows());
  Eigen::MatrixXcd m(2 * d, 2 * d);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  m << id, -sign * z.adjoint(), sign * z, id;
  return m;
}

}  // namespace

BlockOperator oike_projector_direct(const FockOperator& z) {
  const int d = z.dim();
  const Eigen::MatrixXcd frame = chart_frame(z.matrix(), 1.0);
  Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
  p0.topLeftCorner(d, d).setIdentity();
  return BlockOperator::from_flat(frame * p0 * frame.inverse(), d);
}

double inversion_identity_residual(const FockOperator& z) {
  const int d = z.dim();
  const Eigen::MatrixXcd& zm = z.matrix();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd block_inv = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
  block_inv.topLeftCorner(d, d) = (id + zm.adjoint() * zm).inverse();
  block_inv.bottomRightCorner(d, d) = (id + zm * zm.adjoint()).inverse();
  const Eigen::MatrixXcd formula = block_inv * chart_frame(zm, -1.0);
  return (chart_frame(zm, 1.0).inverse() - formula).cwiseAbs().maxCoeff();
}

std::complex<double> classical_coordinate(double x, double y, double z, const Tolerances& tol) {
  const double rho2 = x * x + y * y;
  const double r = std::sqrt(rho2 + z * z);
  const double r_plus_z = z >= 0.0 ? r + z : (r - z > 0.0 ? rho2 / (r - z) : 0.0);
  if (r_plus_z <= tol.string_eps) {
    const PointClass cls = classify_point(std::sqrt(rho2), z, tol);
    throw DiracStringError(cls, "classical_coordinate: r + z vanishes on the lower string");
  }
  return std::complex<double>(x, y) / r_plus_z;
}

Eigen::Matrix2cd classical_oike_projector(std::complex<double> zc) {
  const double s = 1.0 / (1.0 + std::norm(zc));
  Eigen::Matrix2cd p;
  p << s, s * std::conj(zc), s * zc, s * std::norm(zc);
  return p;
}

}  // namespace hjc
