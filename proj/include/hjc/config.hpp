#pragma once

namespace hjc {

// Residual thresholds shared by every module. Three tiers: algebraic
// identities, decomposition reconstructions, and propagator-vs-oracle
// comparisons (exponentials amplify boundary truncation error).
struct Tolerances {
  double algebraic = 1e-12;
  double decomposition = 1e-10;
  double propagator = 1e-8;
  // ||w|| at or below this counts as lying on the w = 0 axis.
  double string_eps = 1e-14;
  // Chart denominators 2R(n)(R(n) +/- theta) at or below this are singular.
  double sector_eps = 1e-14;
  // Denominators in (sector_eps, ill_conditioned) are reported, not rejected.
  double ill_conditioned = 1e-6;
  // Diagonal entries with magnitude at or below this are treated as kernel.
  double pinv_eps = 1e-14;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace hjc
