#include "hjc/hopf_berry.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hjc {

namespace {

AlgebraElement zero(AlgebraTag tag) { return AlgebraElement(tag); }
AlgebraElement real(AlgebraTag tag, double x) { return AlgebraElement::real(tag, x); }

[[noreturn]] void throw_string(PointClass cls, const std::string& what) {
  throw DiracStringError(cls, what + " (point class " + std::string(to_string(cls)) + ")");
}

}  // namespace

// ---------------------------------------------------------------- Matrix2K

Matrix2K::Matrix2K(AlgebraTag tag) : tag_(tag), e_{zero(tag), zero(tag), zero(tag), zero(tag)} {}

Matrix2K::Matrix2K(AlgebraElement a00, AlgebraElement a01, AlgebraElement a10, AlgebraElement a11)
    : tag_(a00.tag()), e_{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {
  for (const auto& e : e_) {
    if (e.tag() != tag_) throw std::invalid_argument("Matrix2K: entries must share one algebra tag");
  }
}

Matrix2K Matrix2K::identity(AlgebraTag tag) { return real(tag, 1.0, 0.0, 0.0, 1.0); }

Matrix2K Matrix2K::diag(AlgebraElement a, AlgebraElement b) {
  const AlgebraTag t = a.tag();
  return Matrix2K(std::move(a), zero(t), zero(t), std::move(b));
}

Matrix2K Matrix2K::real(AlgebraTag tag, double a00, double a01, double a10, double a11) {
  return Matrix2K(hjc::real(tag, a00), hjc::real(tag, a01), hjc::real(tag, a10),
                  hjc::real(tag, a11));
}

Matrix2K Matrix2K::adjoint() const {
  return Matrix2K(conj(e_[0]), conj(e_[2]), conj(e_[1]), conj(e_[3]));
}

Matrix2K operator+(const Matrix2K& a, const Matrix2K& b) {
  return Matrix2K(a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]);
}

Matrix2K operator-(const Matrix2K& a, const Matrix2K& b) {
  return Matrix2K(a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]);
}

Matrix2K operator*(const Matrix2K& a, const Matrix2K& b) {
  auto entry = [&](int i, int j) { return a(i, 0) * b(0, j) + a(i, 1) * b(1, j); };
  return Matrix2K(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1));
}

Matrix2K operator*(double s, const Matrix2K& a) {
  return Matrix2K(s * a.e_[0], s * a.e_[1], s * a.e_[2], s * a.e_[3]);
}

double max_abs_diff(const Matrix2K& a, const Matrix2K& b) { return max_abs(a - b); }

double max_abs(const Matrix2K& m) {
  double out = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out = std::max(out, hjc::max_abs(m(i, j)));
  return out;
}

double hermiticity_residual(const Matrix2K& m) { return max_abs_diff(m, m.adjoint()); }

double unitarity_residual(const Matrix2K& u) {
  return max_abs_diff(u.adjoint() * u, Matrix2K::identity(u.tag()));
}

double idempotency_residual(const Matrix2K& p) { return max_abs_diff(p * p, p); }

Eigen::Matrix2cd to_complex(const Matrix2K& m) {
  if (m.tag() != AlgebraTag::R && m.tag() != AlgebraTag::C) {
    throw std::invalid_argument("to_complex: only R and C matrices embed in M(2, C)");
  }
  Eigen::Matrix2cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto& e = m(i, j);
      out(i, j) = {e[0], e.dim() > 1 ? e[1] : 0.0};
    }
  }
  return out;
}

// --------------------------------------------------------------- BasePoint

BasePoint::BasePoint(AlgebraElement w, double z) : w_(std::move(w)), z_(z) {
  if (!std::isfinite(z)) throw std::invalid_argument("BasePoint: z must be finite");
  norm_w_ = norm(w_);
  r_ = std::sqrt(norm_w_ * norm_w_ + z_ * z_);
}

double BasePoint::r_plus_z() const noexcept {
  if (z_ >= 0.0) return r_ + z_;
  const double rmz = r_ - z_;
  return rmz > 0.0 ? norm_w_ * norm_w_ / rmz : 0.0;
}

double BasePoint::r_minus_z() const noexcept {
  if (z_ <= 0.0) return r_ - z_;
  const double rpz = r_ + z_;
  return rpz > 0.0 ? norm_w_ * norm_w_ / rpz : 0.0;
}

// -------------------------------------------------------------- operations

Matrix2K build_hamiltonian(const BasePoint& p) {
  const AlgebraTag t = p.tag();
  return Matrix2K(real(t, p.z()), conj(p.w()), p.w(), real(t, -p.z()));
}

PointClass classify_point(double norm_w, double z, const Tolerances& tol) {
  if (norm_w > tol.string_eps) return PointClass::Regular;
  if (z < 0.0) return PointClass::LowerString;
  if (z > 0.0) return PointClass::UpperString;
  return PointClass::Origin;
}

PointClass classify_point(const BasePoint& p, const Tolerances& tol) {
  return classify_point(p.norm_w(), p.z(), tol);
}

double chart_conditioning(const BasePoint& p, ChartTag chart, const Tolerances& tol) {
  if (!chart_admits(chart, classify_point(p, tol))) return std::numeric_limits<double>::infinity();
  const double shifted = chart == ChartTag::I ? p.r_plus_z() : p.r_minus_z();
  return 1.0 / std::sqrt(2.0 * p.r() * shifted);
}

Matrix2K chart_unitary(const BasePoint& p, ChartTag chart, const Tolerances& tol) {
  const PointClass cls = classify_point(p, tol);
  if (!chart_admits(chart, cls)) {
    throw_string(cls, "chart " + std::string(to_string(chart)) + " is undefined at this point");
  }
  const AlgebraTag t = p.tag();
  if (chart == ChartTag::I) {
    const double rpz = p.r_plus_z();
    const double s = 1.0 / std::sqrt(2.0 * p.r() * rpz);
    return s * Matrix2K(real(t, rpz), -conj(p.w()), p.w(), real(t, rpz));
  }
  const double rmz = p.r_minus_z();
  const double s = 1.0 / std::sqrt(2.0 * p.r() * rmz);
  return s * Matrix2K(conj(p.w()), real(t, -rmz), real(t, rmz), p.w());
}

ClassicalDecomposition chart_decompose(const BasePoint& p, ChartTag chart, const Tolerances& tol) {
  Matrix2K u = chart_unitary(p, chart, tol);
  const AlgebraTag t = p.tag();
  return {std::move(u), Matrix2K::diag(real(t, p.r()), real(t, -p.r())), chart,
          classify_point(p, tol)};
}

Matrix2K reconstruct(const ClassicalDecomposition& d) {
  return (d.unitary * d.diagonal) * d.unitary.adjoint();
}

Matrix2K transition_function(const BasePoint& p, const Tolerances& tol) {
  const PointClass cls = classify_point(p, tol);
  if (cls != PointClass::Regular) {
    throw_string(cls, "transition function is undefined on the w = 0 axis");
  }
  const double inv = 1.0 / p.norm_w();
  return Matrix2K::diag(inv * conj(p.w()), inv * p.w());
}

Matrix2K basic_projector(AlgebraTag tag) { return Matrix2K::real(tag, 1.0, 0.0, 0.0, 0.0); }

Matrix2K projector(const BasePoint& p, const Tolerances& tol) {
  const PointClass cls = classify_point(p, tol);
  if (cls == PointClass::Origin) throw_string(cls, "projector is undefined at r = 0");
  const AlgebraTag t = p.tag();
  const double s = 1.0 / (2.0 * p.r());
  return s * Matrix2K(real(t, p.r_plus_z()), conj(p.w()), p.w(), real(t, p.r_minus_z()));
}

TwoStepFactors two_step_decompose(const BasePoint& p, const Tolerances& tol) {
  const PointClass cls = classify_point(p, tol);
  if (cls != PointClass::Regular) {
    throw_string(cls, "two-step outer factor w/|w| is undefined on the w = 0 axis");
  }
  const AlgebraTag t = p.tag();
  const AlgebraElement phase = (1.0 / p.norm_w()) * p.w();
  Matrix2K outer = Matrix2K::diag(real(t, 1.0), phase);
  Matrix2K outer_adj = outer.adjoint();
  return {std::move(outer), Matrix2K::real(t, p.z(), p.norm_w(), p.norm_w(), -p.z()),
          std::move(outer_adj)};
}

MiddleDecomposition middle_diagonalize(double norm_w, double z, ChartTag chart,
                                       const Tolerances& tol) {
  if (!(norm_w >= 0.0) || !std::isfinite(norm_w) || !std::isfinite(z)) {
    throw std::invalid_argument("middle_diagonalize: need finite norm_w >= 0 and finite z");
  }
  const PointClass cls = classify_point(norm_w, z, tol);
  if (!chart_admits(chart, cls)) {
    throw_string(cls, "middle matrix chart " + std::string(to_string(chart)) + " is undefined");
  }
  const BasePoint p(AlgebraElement::real(AlgebraTag::R, norm_w), z);
  Eigen::Matrix2d u;
  if (chart == ChartTag::I) {
    const double rpz = p.r_plus_z();
    u << rpz, -norm_w, norm_w, rpz;
    u /= std::sqrt(2.0 * p.r() * rpz);
  } else {
    const double rmz = p.r_minus_z();
    u << norm_w, -rmz, rmz, norm_w;
    u /= std::sqrt(2.0 * p.r() * rmz);
  }
  Eigen::Matrix2d d = Eigen::Vector2d(p.r(), -p.r()).asDiagonal();
  return {u, d, chart, cls};
}

AlgebraElement diagonal_direction(AlgebraTag tag) {
  const int n = dimension(tag);
  std::array<double, AlgebraElement::kMaxDim> c{};
  for (int j = 0; j < n; ++j) c[j] = 1.0 / std::sqrt(static_cast<double>(n));
  return AlgebraElement(tag, std::span<const double>(c.data(), n));
}

}  // namespace hjc
