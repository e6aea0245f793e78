#pragma once

/**
 * @file jc_core.hpp
 * @brief The detuned Jaynes-Cummings Hamiltonian viewed as a
 *        non-commutative two-level (Berry) model.
 *
 *     H_JC = [[theta, a], [a^dagger, -theta]],   theta = (Delta - omega) / 2g
 *
 * acts on C^2 (x) F with a, a^dagger playing the roles of x - iy, x + iy.
 * With R(N) = sqrt(N + theta^2) the two chart unitaries are
 *
 *     V_I  = diag(n_I(N+1), n_I(N))   [[R(N+1)+theta, -a], [a^dagger, R(N)+theta]]
 *     V_II = diag(n_II(N+1), n_II(N)) [[a, -R(N+1)+theta], [R(N)-theta, a^dagger]]
 *
 * with n_I(m) = 1/sqrt(2R(m)(R(m)+theta)), n_II(m) = 1/sqrt(2R(m)(R(m)-theta)),
 * and H_JC = V_I diag(R(N+1), -R(N)) V_I^dagger = V_II diag(R(N), -R(N+1)) V_II^dagger.
 * The only vanishing normalization sits at Fock level 0 of the lower block
 * row: chart II for theta > 0, chart I for theta < 0, both at theta = 0.
 *
 * Truncation: identities are exact in the infinite Fock space; on the
 * truncated space they hold on SafeSubspace(d, 1) (algebraic identities) or
 * SafeSubspace(d, 2) (reconstructions, propagators).
 */

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hjc/block_operator.hpp"
#include "hjc/config.hpp"
#include "hjc/errors.hpp"
#include "hjc/fock.hpp"
#include "hjc/hopf_berry.hpp"
#include "hjc/types.hpp"

namespace hjc {

struct JCParams {
  double theta = 0.0;             // detuning ratio (Delta - omega) / 2g
  double g = 1.0;                 // coupling
  std::optional<double> omega;    // field frequency
  std::optional<double> delta;    // atomic splitting
  int dim = 16;                   // Fock truncation d

  // theta derived from the physical parameters. Throws std::invalid_argument
  // for g == 0 (theta undefined) or dim < 2.
  static JCParams from_physical(double omega, double delta, double g, int dim);

  // Throws std::invalid_argument on dim < 2 or non-finite theta/g.
  void validate() const;
};

// R(n) = sqrt(n + theta^2).
double radius(double n, double theta) noexcept;
// R(n) + theta and R(n) - theta, evaluated without cancellation.
double radius_plus(double n, double theta) noexcept;
double radius_minus(double n, double theta) noexcept;

struct SectorReport {
  double theta = 0.0;
  int dim = 0;
  std::vector<SectorEntry> entries;  // every (chart, row, level)

  std::vector<SectorEntry> singular() const;
  std::vector<SectorEntry> singular(ChartTag chart) const;
  bool chart_regular(ChartTag chart) const { return singular(chart).empty(); }
  // Fock levels at which some chart normalization vanishes.
  std::vector<int> string_levels() const;
  bool degenerate() const noexcept { return theta == 0.0; }
};

// A basis |m> (x) |n> of F x F (upper component level m, lower level n).
// Black sites give strings: m or n is a level where some chart normalization
// vanishes. The normalizer acts on the upper component in one product
// ordering and on the lower one in the other, so both axes are marked.
struct LatticeSite {
  int upper_level = 0;
  int lower_level = 0;
  bool black = false;
};

std::vector<LatticeSite> string_lattice(const SectorReport& report, int levels);

using QuantumDecomposition = ChartDecomposition<BlockOperator, SectorReport>;

BlockOperator build_h_jc(const JCParams& p);

struct SplitHamiltonian {
  BlockOperator h1;  // omega 1 (x) N + (omega/2) sigma_3 (x) 1
  BlockOperator h2;  // g H_JC
};

// Requires omega and delta. Throws std::invalid_argument if either is
// missing or g == 0.
SplitHamiltonian build_full_hamiltonian(const JCParams& p);

// omega 1 (x) N + (Delta/2) sigma_3 (x) 1 + g (sigma_+ (x) a + sigma_- (x) a^dagger),
// assembled directly from the physical parameters.
BlockOperator build_lab_hamiltonian(const JCParams& p);

struct TwoStepFactorization {
  BlockOperator outer;          // diag(1, a^dagger / sqrt(N+1))
  BlockOperator middle;         // [[theta, sqrt(N+1)], [sqrt(N+1), -theta]]
  BlockOperator outer_adjoint;  // diag(1, a / sqrt(N+1))
};

// Note: outer * middle * outer_adjoint reproduces H_JC everywhere except the
// |g, 0> diagonal entry, where it gives 0 instead of -theta, because
// a^dagger (N+1)^-1 a = 1 - |0><0|.
TwoStepFactorization two_step_factorize(const JCParams& p);

// Chart unitaries of the (commuting, diagonal-block) middle matrix:
// M = U diag(R(N+1), -R(N+1)) U^dagger.
BlockOperator middle_unitaries(const JCParams& p, ChartTag chart,
                               const Tolerances& tol = kDefaultTolerances);

SectorReport singular_sectors(const JCParams& p, const Tolerances& tol = kDefaultTolerances);

enum class NormalizerSide { Left, Right };

// V_I or V_II, with the diagonal normalizer on the given side. Throws
// SingularSectorError when the chart normalization vanishes at some level.
BlockOperator build_V(const JCParams& p, ChartTag chart, NormalizerSide side = NormalizerSide::Left,
                      const Tolerances& tol = kDefaultTolerances);

struct PartialChart {
  BlockOperator op;
  std::vector<SectorEntry> masked;  // levels whose normalizer was set to 0
};

// The chart operator with vanishing normalizations replaced by zero, a
// partial isometry that misses exactly the string sector.
PartialChart build_V_partial(const JCParams& p, ChartTag chart,
                             const Tolerances& tol = kDefaultTolerances);

// diag(R(N+1), -R(N)) for chart I, diag(R(N), -R(N+1)) for chart II.
BlockOperator chart_eigenvalues(const JCParams& p, ChartTag chart);

// H_JC = V D V^dagger in the given chart.
QuantumDecomposition final_decompose(const JCParams& p, ChartTag chart,
                                     const Tolerances& tol = kDefaultTolerances);

BlockOperator reconstruct(const QuantumDecomposition& d);

// diag(a / sqrt(N+1), a^dagger / sqrt(N+1)) built from the shifted forms.
BlockOperator transition_operator(int d);
// diag(a pinv(sqrt N), pinv(sqrt N) a^dagger), the kernel-convention form.
BlockOperator transition_operator_pinv(int d, const Tolerances& tol = kDefaultTolerances);

// Lambda = diag(R(N+1), R(N)).
BlockOperator energy_scale(const JCParams& p);

struct QuantumProjector {
  BlockOperator op;
  // True when R(0) = 0 (theta = 0) and the level-0 entry used the
  // pseudo-inverse convention.
  bool ground_pseudo_inverse = false;
};

// diag(1/2R(N+1), 1/2R(N)) [[R(N+1)+theta, a], [a^dagger, R(N)-theta]]
// (Left) or with the normalizer applied on the right.
QuantumProjector projector_jc(const JCParams& p, NormalizerSide side = NormalizerSide::Left,
                              const Tolerances& tol = kDefaultTolerances);

struct SpectralParts {
  BlockOperator plus;    // Lambda P
  BlockOperator minus;   // -Lambda (1 - P)
  BlockOperator lambda;  // Lambda
  bool ground_pseudo_inverse = false;
};

SpectralParts spectral_decompose(const JCParams& p, const Tolerances& tol = kDefaultTolerances);

// Closed form of exp(-i g t H_JC). At R = 0 the ratio sin(gtR)/R takes its
// limit gt.
BlockOperator propagator_closed_form(const JCParams& p, double t);

// exp(-itH) = exp(-itH1) exp(-itH2) with exp(-itH1) diagonal in closed form.
BlockOperator propagator_full(const JCParams& p, double t);

// Basis vector |atom, n>, atom 0 = e, 1 = g.
Eigen::VectorXcd basis_state(int atom, int n, int d);

// <sigma_3> = sum |psi_e|^2 - sum |psi_g|^2.
double atomic_inversion(const Eigen::VectorXcd& psi, int d);

struct SpectrumEntry {
  double value;
  bool interior;  // false for |g,0> and the truncation edge |e,d-1>
};

// Exact spectrum of the truncated H_JC: +/- R(n) for n = 1..d-1 from the
// 2-dim sectors {|e,n-1>, |g,n>}, -theta from |g,0> and theta from the
// isolated edge state |e,d-1>. Sorted ascending.
std::vector<SpectrumEntry> sector_spectrum(const JCParams& p);

}  // namespace hjc
