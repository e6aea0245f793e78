#pragma once

/**
 * @file division_algebra.hpp
 * @brief The four normed division algebras R, C, H, O.
 *
 * Elements are real coefficient vectors of length 1, 2, 4 or 8. Products are
 * built by Cayley-Dickson doubling from R with the convention
 *
 *     (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
 *
 * so slot 0 is the real unit, C = R(i), H = C(j) with k = ij, and
 * O = H(l). Every identity used by the chart code only involves the
 * associative subalgebra generated by a single element, so the particular
 * octonion table this convention produces does not matter downstream.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string_view>

namespace hjc {

enum class AlgebraTag { R, C, H, O };

constexpr int dimension(AlgebraTag tag) noexcept {
  switch (tag) {
    case AlgebraTag::R: return 1;
    case AlgebraTag::C: return 2;
    case AlgebraTag::H: return 4;
    case AlgebraTag::O: return 8;
  }
  return 0;
}

constexpr std::string_view to_string(AlgebraTag tag) noexcept {
  switch (tag) {
    case AlgebraTag::R: return "R";
    case AlgebraTag::C: return "C";
    case AlgebraTag::H: return "H";
    case AlgebraTag::O: return "O";
  }
  return "?";
}

// Throws std::invalid_argument for anything but "R", "C", "H", "O".
AlgebraTag parse_algebra_tag(std::string_view name);

inline constexpr std::array<AlgebraTag, 4> kAllAlgebras{
    AlgebraTag::R, AlgebraTag::C, AlgebraTag::H, AlgebraTag::O};

class AlgebraElement {
 public:
  static constexpr int kMaxDim = 8;

  // The zero element of the given algebra.
  explicit AlgebraElement(AlgebraTag tag = AlgebraTag::R) noexcept : tag_(tag) {}

  // Throws std::invalid_argument on a length mismatch or non-finite entry.
  AlgebraElement(AlgebraTag tag, std::span<const double> coeffs);
  AlgebraElement(AlgebraTag tag, std::initializer_list<double> coeffs);

  static AlgebraElement real(AlgebraTag tag, double x);
  // The j-th generator k_j (k_0 = 1).
  static AlgebraElement basis(AlgebraTag tag, int j);

  AlgebraTag tag() const noexcept { return tag_; }
  int dim() const noexcept { return dimension(tag_); }
  std::span<const double> coeffs() const noexcept {
    return {coeffs_.data(), static_cast<std::size_t>(dim())};
  }
  double operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  double real_part() const noexcept { return coeffs_[0]; }

  bool is_zero() const noexcept;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) noexcept;

 private:
  AlgebraTag tag_;
  std::array<double, kMaxDim> coeffs_{};
};

// Binary operations throw std::invalid_argument when tags differ.
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, double s);
AlgebraElement neg(const AlgebraElement& a);
AlgebraElement conj(const AlgebraElement& a);
double norm_sq(const AlgebraElement& a);
double norm(const AlgebraElement& a);
// conj(a) / norm_sq(a); throws std::domain_error for the zero element.
AlgebraElement inverse(const AlgebraElement& a);

// (ab)c - a(bc).
AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c);

// Largest absolute coefficient.
double max_abs(const AlgebraElement& a);

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return add(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return sub(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a) { return neg(a); }
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); }
inline AlgebraElement operator*(double s, const AlgebraElement& a) { return scale(a, s); }
inline AlgebraElement operator*(const AlgebraElement& a, double s) { return scale(a, s); }

// Standard-normal coefficients.
AlgebraElement random_element(AlgebraTag tag, std::mt19937_64& rng);

struct BasisTriple {
  int i = 0, j = 0, k = 0;
  double associator_norm = 0.0;
};

// Exhaustive search over all generator triples (k_i, k_j, k_k) for one whose
// associator exceeds `threshold`. Returns the first hit in lexicographic order.
std::optional<BasisTriple> find_nonassociative_triple(AlgebraTag tag,
                                                      double threshold = 0.5);

}  // namespace hjc
