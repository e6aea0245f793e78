#include "hjc/fock.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hjc/errors.hpp"

namespace hjc {

namespace {

void require_same_dim(const FockOperator& a, const FockOperator& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": Fock dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_ladder_dim(int d, const char* what) {
  if (d < 2) throw std::invalid_argument(std::string(what) + ": Fock dimension must be >= 2");
}

}  // namespace

FockOperator::FockOperator(Eigen::MatrixXcd data) : data_(std::move(data)) {
  if (data_.rows() == 0 || data_.rows() != data_.cols()) {
    throw std::invalid_argument("FockOperator: matrix must be square and non-empty");
  }
  if (!data_.allFinite()) throw std::invalid_argument("FockOperator: non-finite entry");
}

FockOperator FockOperator::zero(int d) { return FockOperator(Eigen::MatrixXcd::Zero(d, d)); }

FockOperator FockOperator::identity(int d) {
  return FockOperator(Eigen::MatrixXcd::Identity(d, d));
}

FockOperator FockOperator::level_projector(int d, int level) {
  if (level < 0 || level >= d) throw std::out_of_range("level_projector: level out of range");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m(level, level) = 1.0;
  return FockOperator(std::move(m));
}

bool FockOperator::is_diagonal() const {
  for (Eigen::Index j = 0; j < data_.cols(); ++j)
    for (Eigen::Index i = 0; i < data_.rows(); ++i)
      if (i != j && data_(i, j) != cplx(0.0)) return false;
  return true;
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b, "operator+");
  return FockOperator(a.data_ + b.data_);
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b, "operator-");
  return FockOperator(a.data_ - b.data_);
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b, "operator*");
  return FockOperator(a.data_ * b.data_);
}

FockOperator operator*(cplx s, const FockOperator& a) { return FockOperator(s * a.data_); }

SafeSubspace::SafeSubspace(int dim, int margin) : dim_(dim), margin_(margin) {
  if (dim < 1 || margin < 0 || margin >= dim) {
    throw std::invalid_argument("SafeSubspace: need 0 <= margin < dim (dim " +
                                std::to_string(dim) + ", margin " + std::to_string(margin) + ")");
  }
}

FockOperator annihilation(int d) {
  require_ladder_dim(d, "annihilation");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 1; n < d; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return FockOperator(std::move(m));
}

FockOperator creation(int d) {
  require_ladder_dim(d, "creation");
  return annihilation(d).adjoint();
}

FockOperator number(int d) {
  require_ladder_dim(d, "number");
  return func_of_number(d, [](double n) { return n; });
}

FockOperator func_of_number(int d, const std::function<double(double)>& f) {
  if (d < 1) throw std::invalid_argument("func_of_number: dimension must be >= 1");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    const double v = f(static_cast<double>(n));
    if (!std::isfinite(v)) {
      throw LevelError(n, "func_of_number: f is not finite at level " + std::to_string(n));
    }
    m(n, n) = v;
  }
  return FockOperator(std::move(m));
}

FockOperator pseudo_diag_inverse(const FockOperator& op, const Tolerances& tol) {
  if (!op.is_diagonal()) throw std::invalid_argument("pseudo_diag_inverse: operand is not diagonal");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(op.dim(), op.dim());
  for (int n = 0; n < op.dim(); ++n) {
    const cplx v = op(n, n);
    if (std::abs(v) > tol.pinv_eps) m(n, n) = 1.0 / v;
  }
  return FockOperator(std::move(m));
}

double shift_identity_check(const std::function<double(double)>& f, int d) {
  const FockOperator a = annihilation(d);
  const FockOperator f_n = func_of_number(d, f);
  const FockOperator f_n1 = func_of_number(d, [&](double n) { return f(n + 1.0); });
  const FockOperator diff = restrict(a * f_n - f_n1 * a, SafeSubspace(d, 1));
  return diff.matrix().cwiseAbs().maxCoeff();
}

FockOperator restrict(const FockOperator& op, const SafeSubspace& s) {
  if (s.dim() != op.dim()) throw std::invalid_argument("restrict: subspace dimension mismatch");
  return FockOperator(op.matrix().topLeftCorner(s.kept(), s.kept()));
}

double roundoff_floor(double magnitude) {
  return 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, magnitude);
}

}  // namespace hjc
