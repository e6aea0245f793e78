#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "hjc/errors.hpp"
#include "hjc/fock.hpp"

using namespace hjc;

namespace {

double max_abs(const FockOperator& op) { return op.matrix().cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("ladder operators at d = 2") {
  Eigen::MatrixXcd a(2, 2), ad(2, 2);
  a << 0, 1, 0, 0;
  ad << 0, 0, 1, 0;
  CHECK(annihilation(2).matrix() == a);
  CHECK(creation(2).matrix() == ad);
  CHECK_THROWS_AS(annihilation(1), std::invalid_argument);
}

TEST_CASE("ladder action and truncation") {
  const int d = 6;
  Eigen::VectorXcd ket3 = Eigen::VectorXcd::Zero(d);
  ket3(3) = 1.0;
  const Eigen::VectorXcd out = annihilation(d).matrix() * ket3;
  CHECK(std::abs(out(2) - std::sqrt(3.0)) == 0.0);
  CHECK(out.cwiseAbs().sum() == doctest::Approx(std::sqrt(3.0)));

  Eigen::VectorXcd top = Eigen::VectorXcd::Zero(d);
  top(d - 1) = 1.0;
  CHECK((creation(d).matrix() * top).isZero(0.0));
  CHECK(creation(d).adjoint().matrix() == annihilation(d).matrix());
}

TEST_CASE("number operator") {
  for (int d : {2, 5, 16}) {
    const FockOperator n = number(d);
    CHECK(max_abs(creation(d) * annihilation(d) - n) <= roundoff_floor(d));
    for (int k = 0; k < d; ++k) CHECK(n(k, k) == std::complex<double>(k, 0));
    CHECK(n.is_diagonal());
  }
}

TEST_CASE("truncated commutator") {
  for (int d : {8, 32}) {
    const FockOperator a = annihilation(d), ad = creation(d);
    const Eigen::MatrixXcd c = (a * ad - ad * a).matrix();
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(d, d);
    expected(d - 1, d - 1) = -(d - 1.0);
    CHECK((c - expected).cwiseAbs().maxCoeff() <= roundoff_floor(d));
  }
}

TEST_CASE("partial isometry identities") {
  for (int d : {8, 32}) {
    const FockOperator a = annihilation(d), ad = creation(d);
    const FockOperator inv_sqrt = func_of_number(d, [](double n) { return 1.0 / std::sqrt(n + 1.0); });
    // Shift S = (N+1)^-1/2 a: S S^dagger = 1 - |d-1><d-1|, S^dagger S = 1 - |0><0|.
    const FockOperator s = inv_sqrt * a;
    const FockOperator id = FockOperator::identity(d);
    CHECK(max_abs(s * s.adjoint() - (id - FockOperator::level_projector(d, d - 1))) <= roundoff_floor(1));
    CHECK(max_abs(s.adjoint() * s - (id - FockOperator::level_projector(d, 0))) <= roundoff_floor(1));
    // (N+1)^-1/2 a a^dagger (N+1)^-1/2 = 1 on the safe subspace.
    CHECK(max_abs(restrict(inv_sqrt * a * ad * inv_sqrt - id, SafeSubspace(d, 1))) <= roundoff_floor(1));
  }
}

TEST_CASE("functions of the number operator") {
  CHECK(max_abs(func_of_number(7, [](double n) { return n; }) - number(7)) == 0.0);

  const FockOperator r = func_of_number(3, [](double n) { return std::sqrt(n + 1.0); });
  CHECK(r(0, 0) == std::complex<double>(1.0));
  CHECK(r(1, 1) == std::complex<double>(std::sqrt(2.0)));
  CHECK(r(2, 2) == std::complex<double>(std::sqrt(3.0)));

  try {
    func_of_number(4, [](double n) { return 1.0 / std::sqrt(n); });
    FAIL("expected LevelError");
  } catch (const LevelError& e) {
    CHECK(e.level() == 0);
  }
}

TEST_CASE("pseudo-inverse of diagonal operators") {
  const FockOperator n = number(3);
  const FockOperator pi = pseudo_diag_inverse(n);
  CHECK(pi(0, 0) == std::complex<double>(0.0));
  CHECK(pi(1, 1) == std::complex<double>(1.0));
  CHECK(pi(2, 2) == std::complex<double>(0.5));

  const FockOperator f = func_of_number(5, [](double k) { return 2.0 + k; });
  CHECK(max_abs(pseudo_diag_inverse(f) * f - FockOperator::identity(5)) <= roundoff_floor(1));
  CHECK_THROWS_AS(pseudo_diag_inverse(annihilation(4)), std::invalid_argument);

  // a pinv(sqrt N) = (N+1)^-1/2 a on the whole truncated space.
  for (int d : {4, 16}) {
    const FockOperator a = annihilation(d);
    const FockOperator lhs = a * pseudo_diag_inverse(func_of_number(d, [](double k) { return std::sqrt(k); }));
    const FockOperator rhs = func_of_number(d, [](double k) { return 1.0 / std::sqrt(k + 1.0); }) * a;
    CHECK(max_abs(lhs - rhs) <= roundoff_floor(1));
  }
}

TEST_CASE("shift identity") {
  CHECK(shift_identity_check([](double) { return 3.0; }, 8) == 0.0);
  CHECK(shift_identity_check([](double n) { return n; }, 8) <= roundoff_floor(8));
  CHECK(shift_identity_check([](double n) { return std::sqrt(n + 0.09); }, 32) <= 1e-13);
  CHECK_THROWS_AS(shift_identity_check([](double n) { return 1.0 / (n - 3.0); }, 8), LevelError);
}

TEST_CASE("operator validation") {
  CHECK_THROWS_AS(FockOperator(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(FockOperator(Eigen::MatrixXcd()), std::invalid_argument);
  CHECK_THROWS_AS(number(4) + number(5), std::invalid_argument);
  CHECK_THROWS_AS(SafeSubspace(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(SafeSubspace(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(restrict(number(5), SafeSubspace(4, 1)), std::invalid_argument);
  CHECK(SafeSubspace(10, 2).kept() == 8);
  CHECK(restrict(number(10), SafeSubspace(10, 2)).dim() == 8);
}
