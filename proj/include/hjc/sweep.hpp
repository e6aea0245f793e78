#pragma once

/**
 * @file sweep.hpp
 * @brief Data-parallel verification sweeps.
 *
 * Every kernel evaluates independent work items (grid points, random
 * samples, detuning values, time points) and writes one result slot per
 * item, so the OpenMP path is bitwise identical to the serial reference and
 * the output order never depends on scheduling. Exceptions are caught per
 * item and recorded in the result.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hjc/config.hpp"
#include "hjc/division_algebra.hpp"
#include "hjc/grassmann.hpp"
#include "hjc/hopf_berry.hpp"
#include "hjc/jc_core.hpp"

namespace hjc::sweep {

enum class Exec { Serial, Parallel };

// Worker count used by Exec::Parallel.
int parallel_threads();

// ----------------------------------------------------------- algebra

struct AlgebraSample {
  AlgebraElement a, b, c;
};

std::vector<AlgebraSample> draw_algebra_samples(AlgebraTag tag, int count, std::uint64_t seed);

// Worst case over the samples.
struct AlgebraCheck {
  AlgebraTag tag = AlgebraTag::R;
  int samples = 0;
  double norm_multiplicativity = 0.0;  // |N(ab) - N(a)N(b)| / (N(a)N(b)), N = norm_sq
  double conjugation = 0.0;            // |conj(ab) - conj(b)conj(a)|
  double associativity = 0.0;          // |(ab)c - a(bc)|
  double alternativity = 0.0;          // max of |a(ab) - (aa)b|, |(ab)b - a(bb)|
  double inverse = 0.0;                // |a inverse(a) - 1|
  double single_generator = 0.0;       // associator/commutator on words in one element
};

AlgebraCheck algebra_check(AlgebraTag tag, std::span<const AlgebraSample> samples, Exec exec);

// ------------------------------------------------------------- berry

struct ChartCheck {
  double reconstruction = 0.0;  // max |H - U D U^dagger|
  double unitarity = 0.0;       // max |U^dagger U - 1|
  double eigenvector = 0.0;     // max |H u_1 - r u_1|
  double projector = 0.0;       // max |U P0 U^dagger - P|
};

struct BerryRecord {
  std::size_t index = 0;
  std::string source;  // "grid" or "random"
  double w_norm = 0.0;
  double z = 0.0;
  AlgebraElement w;
  PointClass point_class = PointClass::Regular;
  std::optional<ChartCheck> chart_I, chart_II;
  bool chart_I_raised = false;  // DiracStringError seen
  bool chart_II_raised = false;
  std::optional<double> cocycle;             // max |U_II - U_I Phi|
  std::optional<double> projector_idempotency;
  std::optional<double> projector_hermiticity;
  std::optional<double> projector_max_entry;
  bool projector_raised = false;
  double conditioning_I = 0.0;   // +inf where undefined
  double conditioning_II = 0.0;
  std::string error;             // unexpected failure, empty if none
  bool pass = false;
};

struct LabeledPoint {
  BasePoint point;
  std::string source;
};

// Grid of points w = s * u (u = diagonal_direction(tag)), z over a range.
// Throws std::invalid_argument on an empty or malformed grid.
std::vector<LabeledPoint> berry_grid(AlgebraTag tag, double z_min, double z_max, int z_steps,
                                     double w_min, double w_max, int w_steps);

// Random points with standard-normal w coefficients and z.
std::vector<LabeledPoint> berry_random(AlgebraTag tag, int count, std::uint64_t seed);

std::vector<BerryRecord> berry_sweep(std::span<const LabeledPoint> points, const Tolerances& tol,
                                     Exec exec);

// ---------------------------------------------------------------- jc

struct JCRecord {
  double theta = 0.0;
  int dim = 0;
  std::vector<ChartTag> admissible;
  std::vector<SectorEntry> inadmissible;  // entries reported by SingularSectorError
  double decomposition = 0.0;            // worst admissible chart, SafeSubspace(d, 2)
  double unitarity = 0.0;                // worst admissible chart, SafeSubspace(d, 1)
  double ordering = 0.0;                 // left vs right normalizer
  double eigenvalues = 0.0;              // interior spectrum vs oracle eigensolver
  double projector_idempotency = 0.0;    // SafeSubspace(d, 1)
  double projector_hermiticity = 0.0;
  double projector_ordering = 0.0;
  double projector_vs_chart = 0.0;       // admissible V P0 V^dagger vs closed form
  double spectral = 0.0;                 // Lambda P - Lambda (1 - P) vs H, SafeSubspace(d, 2)
  double spectral_commutator = 0.0;      // |[Lambda, P]|
  double two_step_off_ground = 0.0;      // L M L^dagger vs H away from |g,0>
  double two_step_ground_defect = 0.0;   // |(L M L^dagger - H)_{g0,g0}|
  bool ground_pseudo_inverse = false;
  std::string error;
  bool pass = false;
};

std::vector<JCRecord> jc_sweep(std::span<const double> thetas, int dim, const Tolerances& tol,
                               Exec exec);

// ------------------------------------------------------------ strings

struct StringsRecord {
  SectorReport report;
  bool matches_ground_claim = false;  // singular set is exactly the expected level-0 entries
};

std::vector<StringsRecord> strings_sweep(std::span<const double> thetas, int dim,
                                         const Tolerances& tol, Exec exec);

// ------------------------------------------------------------- evolve

struct EvolvePoint {
  double t = 0.0;
  double closed_vs_oracle = 0.0;           // SafeSubspace(d, 2)
  double unitarity = 0.0;                  // SafeSubspace(d, 1)
  std::optional<double> full_vs_oracle;    // when omega, delta given
  double inversion = 0.0;                  // <sigma_3> for |e, n0>
};

std::vector<double> time_grid(double t_max, int steps);

std::vector<EvolvePoint> evolve_series(const JCParams& p, std::span<const double> times, int n0,
                                       Exec exec);

// ---------------------------------------------------------- grassmann

struct GrassmannRecord {
  double theta = 0.0;
  int dim = 0;
  std::optional<double> roundtrip;        // |P(Z) - P_JC| on SafeSubspace(d, 1)
  std::optional<double> two_form;
  std::optional<double> inversion_identity;
  std::optional<double> upper_block;      // (1+Z^dag Z)^-1 vs (R(N+1)+theta)/2R(N+1)
  std::vector<int> singular_levels;
  std::string error;
  bool pass = false;
};

std::vector<GrassmannRecord> grassmann_sweep(std::span<const double> thetas, int dim,
                                             const Tolerances& tol, Exec exec);

// Worst |P_oike(Z_c) - P| over random points of C x R with r + z > min_r_plus_z.
double classical_coordinate_check(int count, std::uint64_t seed, double min_r_plus_z, Exec exec);

}  // namespace hjc::sweep
