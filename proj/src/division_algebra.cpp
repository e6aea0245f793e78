#include "hjc/division_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hjc {

namespace {

void require_same_tag(const AlgebraElement& a, const AlgebraElement& b, const char* op) {
  if (a.tag() != b.tag()) {
    throw std::invalid_argument(std::string(op) + ": algebra tag mismatch (" +
                                std::string(to_string(a.tag())) + " vs " +
                                std::string(to_string(b.tag())) + ")");
  }
}

// out <- conj(x), n coefficients.
void cd_conj(const double* x, double* out, int n) {
  out[0] = x[0];
  for (int j = 1; j < n; ++j) out[j] = -x[j];
}

// out <- x * y for n = 2^k coefficients, by Cayley-Dickson recursion.
// x = (a, b), y = (c, d):  xy = (ac - conj(d) b, d a + b conj(c)).
void cd_mul(const double* x, const double* y, double* out, int n) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const int h = n / 2;
  const double* a = x;
  const double* b = x + h;
  const double* c = y;
  const double* d = y + h;

  std::array<double, AlgebraElement::kMaxDim> cc{}, dc{}, t1{}, t2{};
  cd_conj(c, cc.data(), h);
  cd_conj(d, dc.data(), h);

  cd_mul(a, c, t1.data(), h);
  cd_mul(dc.data(), b, t2.data(), h);
  for (int j = 0; j < h; ++j) out[j] = t1[j] - t2[j];

  cd_mul(d, a, t1.data(), h);
  cd_mul(b, cc.data(), t2.data(), h);
  for (int j = 0; j < h; ++j) out[h + j] = t1[j] + t2[j];
}

}  // namespace

AlgebraTag parse_algebra_tag(std::string_view name) {
  for (AlgebraTag t : kAllAlgebras) {
    if (name == to_string(t)) return t;
  }
  throw std::invalid_argument("unknown algebra tag '" + std::string(name) +
                              "' (expected R, C, H or O)");
}

AlgebraElement::AlgebraElement(AlgebraTag tag, std::span<const double> coeffs) : tag_(tag) {
  if (static_cast<int>(coeffs.size()) != dimension(tag)) {
    throw std::invalid_argument("AlgebraElement: " + std::string(to_string(tag)) + " needs " +
                                std::to_string(dimension(tag)) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!std::isfinite(coeffs[j])) {
      throw std::invalid_argument("AlgebraElement: non-finite coefficient at slot " +
                                  std::to_string(j));
    }
    coeffs_[j] = coeffs[j];
  }
}

AlgebraElement::AlgebraElement(AlgebraTag tag, std::initializer_list<double> coeffs)
    : AlgebraElement(tag, std::span<const double>(coeffs.begin(), coeffs.size())) {}

AlgebraElement AlgebraElement::real(AlgebraTag tag, double x) {
  AlgebraElement e(tag);
  if (!std::isfinite(x)) throw std::invalid_argument("AlgebraElement::real: non-finite value");
  e.coeffs_[0] = x;
  return e;
}

AlgebraElement AlgebraElement::basis(AlgebraTag tag, int j) {
  if (j < 0 || j >= dimension(tag)) {
    throw std::out_of_range("AlgebraElement::basis: generator index out of range");
  }
  AlgebraElement e(tag);
  e.coeffs_[static_cast<std::size_t>(j)] = 1.0;
  return e;
}

bool AlgebraElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double v) { return v == 0.0; });
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) noexcept {
  return a.tag_ == b.tag_ && a.coeffs_ == b.coeffs_;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_tag(a, b, "add");
  std::array<double, AlgebraElement::kMaxDim> out{};
  for (int j = 0; j < a.dim(); ++j) out[j] = a[j] + b[j];
  return AlgebraElement(a.tag(), std::span<const double>(out.data(), a.dim()));
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_tag(a, b, "sub");
  std::array<double, AlgebraElement::kMaxDim> out{};
  for (int j = 0; j < a.dim(); ++j) out[j] = a[j] - b[j];
  return AlgebraElement(a.tag(), std::span<const double>(out.data(), a.dim()));
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_tag(a, b, "mul");
  std::array<double, AlgebraElement::kMaxDim> out{};
  cd_mul(a.coeffs().data(), b.coeffs().data(), out.data(), a.dim());
  return AlgebraElement(a.tag(), std::span<const double>(out.data(), a.dim()));
}

AlgebraElement scale(const AlgebraElement& a, double s) {
  std::array<double, AlgebraElement::kMaxDim> out{};
  for (int j = 0; j < a.dim(); ++j) out[j] = s * a[j];
  return AlgebraElement(a.tag(), std::span<const double>(out.data(), a.dim()));
}

AlgebraElement neg(const AlgebraElement& a) { return scale(a, -1.0); }

AlgebraElement conj(const AlgebraElement& a) {
  std::array<double, AlgebraElement::kMaxDim> out{};
  cd_conj(a.coeffs().data(), out.data(), a.dim());
  return AlgebraElement(a.tag(), std::span<const double>(out.data(), a.dim()));
}

double norm_sq(const AlgebraElement& a) {
  double s = 0.0;
  for (double v : a.coeffs()) s += v * v;
  return s;
}

double norm(const AlgebraElement& a) { return std::sqrt(norm_sq(a)); }

AlgebraElement inverse(const AlgebraElement& a) {
  const double n2 = norm_sq(a);
  if (n2 == 0.0) throw std::domain_error("inverse: zero element has no inverse");
  return scale(conj(a), 1.0 / n2);
}

AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c) {
  return sub(mul(mul(a, b), c), mul(a, mul(b, c)));
}

double max_abs(const AlgebraElement& a) {
  double m = 0.0;
  for (double v : a.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

AlgebraElement random_element(AlgebraTag tag, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<double, AlgebraElement::kMaxDim> c{};
  for (int j = 0; j < dimension(tag); ++j) c[j] = normal(rng);
  return AlgebraElement(tag, std::span<const double>(c.data(), dimension(tag)));
}

std::optional<BasisTriple> find_nonassociative_triple(AlgebraTag tag, double threshold) {
  const int n = dimension(tag);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const auto assoc = associator(AlgebraElement::basis(tag, i), AlgebraElement::basis(tag, j),
                                      AlgebraElement::basis(tag, k));
        const double m = norm(assoc);
        if (m > threshold) return BasisTriple{i, j, k, m};
      }
    }
  }
  return std::nullopt;
}

}  // namespace hjc
