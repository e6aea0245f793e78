#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hjc/errors.hpp"
#include "hjc/hopf_berry.hpp"
#include "hjc/jc_core.hpp"
#include "hjc/oracle.hpp"

using namespace hjc;

namespace {

JCParams params(double theta, int dim) {
  JCParams p;
  p.theta = theta;
  p.dim = dim;
  return p;
}

double max_abs(const BlockOperator& op) { return op.flat().cwiseAbs().maxCoeff(); }

std::vector<SectorEntry> singular_of(const SectorReport& r) { return r.singular(); }

}  // namespace

TEST_CASE("Hamiltonian layout") {
  const BlockOperator h = build_h_jc(params(1.0, 2));
  Eigen::MatrixXcd expected(4, 4);
  expected << 1, 0, 0, 1,
              0, 1, 0, 0,
              0, 0, -1, 0,
              1, 0, 0, -1;
  CHECK(h.flat() == expected);

  const BlockOperator h0 = build_h_jc(params(0.0, 2));
  CHECK(h0.block(0, 0).matrix().isZero(0.0));
  CHECK(h0.block(1, 1).matrix().isZero(0.0));
  CHECK(h0.block(0, 1).matrix() == annihilation(2).matrix());
  CHECK(h0.block(1, 0).matrix() == creation(2).matrix());

  for (double th : {-0.7, 0.3, 1.9}) {
    const BlockOperator hh = build_h_jc(params(th, 12));
    CHECK(max_abs(hh - hh.adjoint()) == 0.0);
  }
  CHECK(flat_index(0, 3, 8) == 3);
  CHECK(flat_index(1, 3, 8) == 11);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(JCParams::from_physical(1.0, 2.0, 0.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(build_h_jc(params(0.5, 1)), std::invalid_argument);
  CHECK_THROWS_AS(build_h_jc(params(NAN, 8)), std::invalid_argument);
  JCParams bad = JCParams::from_physical(2.0, 3.0, 1.0, 8);
  CHECK(bad.theta == doctest::Approx(0.5));
  bad.theta = 0.4;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("radius helpers avoid cancellation") {
  CHECK(radius(3.0, 1.0) == doctest::Approx(2.0));
  CHECK(radius_minus(0.0, 0.5) == 0.0);
  CHECK(radius_plus(0.0, -0.5) == 0.0);
  const double th = 1e8;
  CHECK(radius_minus(1.0, th) == doctest::Approx(0.5 / th).epsilon(1e-12));
  CHECK(radius_plus(1.0, -th) == doctest::Approx(0.5 / th).epsilon(1e-12));
}

TEST_CASE("split Hamiltonian") {
  for (int d : {4, 16, 33}) {
    const JCParams p = JCParams::from_physical(1.7, 2.9, 0.6, d);
    const SplitHamiltonian s = build_full_hamiltonian(p);
    CHECK(max_abs(s.h1 * s.h2 - s.h2 * s.h1) <= roundoff_floor(1.7 * 0.6 * d));
    CHECK(max_abs(s.h1 + s.h2 - build_lab_hamiltonian(p)) <= roundoff_floor(1.7 * d));
  }
  const JCParams res = JCParams::from_physical(2.0, 2.0, 0.8, 8);
  CHECK(res.theta == 0.0);
  const SplitHamiltonian s = build_full_hamiltonian(res);
  CHECK(max_abs(s.h2 - 0.8 * build_h_jc(res)) == 0.0);
  CHECK(s.h2.block(0, 0).matrix().isZero(0.0));
  CHECK_THROWS_AS(build_full_hamiltonian(params(0.5, 8)), std::invalid_argument);
}

TEST_CASE("two-step factorization") {
  const TwoStepFactorization f0 = two_step_factorize(params(0.0, 3));
  const FockOperator sq = func_of_number(3, [](double n) { return std::sqrt(n + 1.0); });
  CHECK(f0.middle.block(0, 0).matrix().isZero(0.0));
  CHECK(f0.middle.block(0, 1).matrix() == sq.matrix());
  CHECK(f0.middle.block(1, 0).matrix() == sq.matrix());

  for (double th : {0.5, -1.3}) {
    const int d = 16;
    const JCParams p = params(th, d);
    const TwoStepFactorization f = two_step_factorize(p);
    Eigen::MatrixXcd diff = (f.outer * f.middle * f.outer_adjoint - build_h_jc(p)).flat();
    const int g0 = flat_index(1, 0, d);
    // a^dagger (N+1)^-1 a = 1 - |0><0| drops the |g,0> diagonal entry.
    CHECK(std::abs(diff(g0, g0)) == doctest::Approx(std::abs(th)));
    diff(g0, g0) = 0.0;
    CHECK(oracle::restrict_blocks(diff, 1, 2).cwiseAbs().maxCoeff() <= 1e-13);

    const BlockOperator ll = f.outer * f.outer_adjoint;
    const BlockOperator expected = BlockOperator::diag(
        FockOperator::identity(d), FockOperator::identity(d) - FockOperator::level_projector(d, 0));
    CHECK(residual(ll, expected, 0) <= roundoff_floor(1));
    CHECK(residual(f.outer_adjoint * f.outer, BlockOperator::identity(d), 1) <= roundoff_floor(1));
  }
}

TEST_CASE("middle unitaries") {
  const JCParams p = params(0.5, 16);
  const BlockOperator m = two_step_factorize(p).middle;
  const FockOperator r1 = func_of_number(16, [](double n) { return radius(n + 1, 0.5); });
  const BlockOperator diag = BlockOperator::diag(r1, -r1);
  for (ChartTag chart : {ChartTag::I, ChartTag::II}) {
    const BlockOperator u = middle_unitaries(p, chart);
    CHECK(residual(u * diag * u.adjoint(), m, 0) <= 1e-12);
    CHECK(residual(u.adjoint() * u, BlockOperator::identity(16), 0) <= 1e-12);
  }
  // The ground-sector singularity only appears once the outer factors are
  // folded in.
  CHECK_THROWS_AS(build_V(p, ChartTag::II), SingularSectorError);
}

TEST_CASE("singular sectors") {
  const auto expect_single = [](double th, ChartTag chart) {
    const auto s = singular_of(singular_sectors(params(th, 12)));
    REQUIRE(s.size() == 1);
    CHECK(s[0].chart == chart);
    CHECK(s[0].row == 2);
    CHECK(s[0].level == 0);
  };
  expect_single(1.0, ChartTag::II);
  expect_single(0.5, ChartTag::II);
  expect_single(-1.0, ChartTag::I);

  const SectorReport r0 = singular_sectors(params(0.0, 12));
  CHECK(r0.degenerate());
  CHECK(r0.singular().size() == 2);
  CHECK(r0.string_levels() == std::vector<int>{0});

  const SectorReport r1 = singular_sectors(params(1.0, 12));
  double min_den = INFINITY;
  for (const auto& e : r1.entries)
    if (e.chart == ChartTag::I) min_den = std::min(min_den, e.denominator);
  CHECK(min_den == doctest::Approx(4.0));
  CHECK(r1.chart_regular(ChartTag::I));
  CHECK_FALSE(r1.chart_regular(ChartTag::II));

  // Small theta: the admissible chart's level-0 denominator 4 theta^2 is
  // reported as ill-conditioned but not singular.
  const SectorReport tiny = singular_sectors(params(1e-5, 8));
  CHECK(tiny.singular().size() == 1);
  bool flagged = false;
  for (const auto& e : tiny.entries) flagged = flagged || e.ill_conditioned;
  CHECK(flagged);
}

TEST_CASE("string lattice") {
  const SectorReport r = singular_sectors(params(0.5, 8));
  const auto sites = string_lattice(r, 4);
  REQUIRE(sites.size() == 16);
  for (const auto& s : sites) CHECK(s.black == (s.upper_level == 0 || s.lower_level == 0));
  CHECK_THROWS_AS(string_lattice(r, 9), std::invalid_argument);
}

TEST_CASE("chart operators") {
  const int d = 24;
  const JCParams p = params(0.5, d);
  const BlockOperator v = build_V(p, ChartTag::I);
  CHECK(residual(v.adjoint() * v, BlockOperator::identity(d), 1) <= 1e-12);
  CHECK(residual(v, build_V(p, ChartTag::I, NormalizerSide::Right), 0) <= 1e-13);

  try {
    build_V(params(-0.75, d), ChartTag::I);
    FAIL("expected SingularSectorError");
  } catch (const SingularSectorError& e) {
    REQUIRE(e.entries().size() == 1);
    CHECK(e.entries()[0].row == 2);
    CHECK(e.entries()[0].level == 0);
  }

  for (double th : {-1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0}) {
    const JCParams q = params(th, 32);
    const ChartTag good = th > 0 ? ChartTag::I : ChartTag::II;
    const ChartTag bad = th > 0 ? ChartTag::II : ChartTag::I;
    const QuantumDecomposition dec = final_decompose(q, good);
    CHECK(residual(reconstruct(dec), build_h_jc(q), 2) <= 1e-10);
    CHECK(residual(dec.unitary.adjoint() * dec.unitary, BlockOperator::identity(32), 1) <= 1e-12);
    CHECK(residual(dec.unitary, build_V(q, good, NormalizerSide::Right), 0) <= 1e-13);
    CHECK_THROWS_AS(final_decompose(q, bad), SingularSectorError);
  }
}

TEST_CASE("partial chart and cocycle") {
  const int d = 16;
  const JCParams p = params(0.5, d);
  const PartialChart partial = build_V_partial(p, ChartTag::II);
  REQUIRE(partial.masked.size() == 1);
  CHECK(partial.masked[0].level == 0);

  const BlockOperator v1 = build_V(p, ChartTag::I);
  Eigen::MatrixXcd diff = (partial.op - v1 * transition_operator(d)).flat();
  // The ground column |e,0> is where the masked chart loses rank.
  diff.col(flat_index(0, 0, d)).setZero();
  CHECK(oracle::restrict_blocks(diff, 1, 2).cwiseAbs().maxCoeff() <= 1e-12);

  const BlockOperator t = transition_operator(3);
  Eigen::MatrixXcd shift(3, 3);
  shift << 0, 1, 0, 0, 0, 1, 0, 0, 0;
  CHECK((t.block(0, 0).matrix() - shift).cwiseAbs().maxCoeff() <= roundoff_floor(1));
  CHECK(residual(transition_operator(d), transition_operator_pinv(d), 0) <= roundoff_floor(1));
}

TEST_CASE("eigenvalue spectrum") {
  for (int d : {8, 16}) {
    const JCParams p = params(0.3, d);
    const auto es = oracle::eig_hermitian(build_h_jc(p).flat());
    const auto pred = sector_spectrum(p);
    REQUIRE(pred.size() == static_cast<std::size_t>(2 * d));
    int interior = 0;
    for (std::size_t k = 0; k < pred.size(); ++k) {
      CHECK(std::abs(es.values(static_cast<Eigen::Index>(k)) - pred[k].value) <= 1e-10);
      interior += pred[k].interior ? 1 : 0;
    }
    CHECK(interior == 2 * (d - 1));
  }
}

TEST_CASE("projector") {
  const int d = 24;
  for (double th : {0.5, 1.0, -0.8}) {
    const JCParams p = params(th, d);
    const BlockOperator pr = projector_jc(p).op;
    CHECK(residual(pr * pr, pr, 1) <= 1e-12);
    CHECK(residual(pr, pr.adjoint(), 1) <= 1e-12);
    CHECK(residual(pr, projector_jc(p, NormalizerSide::Right).op, 1) <= 1e-12);
    const ChartTag good = th > 0 ? ChartTag::I : ChartTag::II;
    const BlockOperator v = build_V(p, good);
    const BlockOperator p0 = BlockOperator::diag(FockOperator::identity(d), FockOperator::zero(d));
    CHECK(residual(v * p0 * v.adjoint(), pr, 1) <= 1e-12);

    // Each invariant sector {|e,n>, |g,n+1>} carries one state of the range.
    for (int n = 0; n + 1 < d; ++n) {
      const auto tr = pr.flat()(flat_index(0, n, d), flat_index(0, n, d)) +
                      pr.flat()(flat_index(1, n + 1, d), flat_index(1, n + 1, d));
      CHECK(std::abs(tr - 1.0) <= 1e-14);
    }
  }

  // Each level matches the classical projector at (w, z) = (sqrt(n), theta).
  const double th = 0.4;
  const BlockOperator pr = projector_jc(params(th, 12)).op;
  for (int n = 1; n < 12; ++n) {
    const Matrix2K cl = projector(BasePoint(AlgebraElement(AlgebraTag::C, {std::sqrt(double(n)), 0.0}), th));
    CHECK(std::abs(pr.flat()(flat_index(1, n, 12), flat_index(1, n, 12)) - cl(1, 1).real_part()) <= 1e-15);
    CHECK(std::abs(pr.flat()(flat_index(0, n - 1, 12), flat_index(0, n - 1, 12)) - cl(0, 0).real_part()) <= 1e-15);
  }

  const QuantumProjector degenerate = projector_jc(params(0.0, 8));
  CHECK(degenerate.ground_pseudo_inverse);
  CHECK(std::abs(degenerate.op.flat()(flat_index(1, 0, 8), flat_index(1, 0, 8))) == 0.0);
}

TEST_CASE("spectral decomposition") {
  const int d = 32;
  const JCParams p = params(0.5, d);
  const SpectralParts s = spectral_decompose(p);
  CHECK(residual(s.plus + s.minus, build_h_jc(p), 2) <= 1e-10);
  const BlockOperator pr = projector_jc(p).op;
  CHECK(max_abs(s.lambda * pr - pr * s.lambda) <= 1e-12);
  CHECK(residual(s.lambda, energy_scale(p), 0) == 0.0);
}

TEST_CASE("propagator") {
  const JCParams p = params(0.25, 40);
  CHECK(residual(propagator_closed_form(p, 0.0), BlockOperator::identity(40), 0) == 0.0);

  const auto u = propagator_closed_form(p, 3.7);
  CHECK(oracle::residual(u.flat(), oracle::expm_hermitian(build_h_jc(p).flat(), 3.7), 2, 2).value <= 1e-8);
  CHECK(residual(u.adjoint() * u, BlockOperator::identity(40), 1) <= 1e-10);

  // Resonance: the diagonal blocks are cos(gt sqrt(N+1)) and cos(gt sqrt(N)).
  JCParams r = params(0.0, 12);
  r.g = 0.7;
  const double t = 2.3;
  const BlockOperator ur = propagator_closed_form(r, t);
  for (int n = 0; n < 12; ++n) {
    CHECK(std::abs(ur.block(0, 0)(n, n) - std::cos(r.g * t * std::sqrt(n + 1.0))) <= 1e-15);
    CHECK(std::abs(ur.block(1, 1)(n, n) - std::cos(r.g * t * std::sqrt(double(n)))) <= 1e-15);
  }

  const JCParams full = JCParams::from_physical(2.0, 2.5, 1.0, 40);
  const oracle::HermitianExponential lab(build_lab_hamiltonian(full).flat());
  for (double tt : {0.0, 1.3, 7.9}) {
    CHECK(oracle::residual(propagator_full(full, tt).flat(), lab(tt), 2, 2).value <= 1e-8);
  }
  CHECK_THROWS_AS(propagator_full(p, 1.0), std::invalid_argument);
}

TEST_CASE("atomic inversion") {
  const int d = 10;
  CHECK(atomic_inversion(basis_state(0, 3, d), d) == 1.0);
  CHECK(atomic_inversion(basis_state(1, 3, d), d) == -1.0);
  CHECK_THROWS_AS(basis_state(2, 0, d), std::out_of_range);

  // Resonant Rabi oscillation from |e,n>: <sigma_3> = cos(2 g t sqrt(n+1)).
  const JCParams p = params(0.0, d);
  const int n = 2;
  for (double t : {0.1, 0.9, 2.4}) {
    const Eigen::VectorXcd psi = propagator_closed_form(p, t).flat() * basis_state(0, n, d);
    CHECK(atomic_inversion(psi, d) == doctest::Approx(std::cos(2.0 * t * std::sqrt(n + 1.0))).epsilon(1e-13));
  }
}
