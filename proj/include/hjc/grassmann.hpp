#pragma once

// Local coordinate Z of the quantum projector in the Oike parametrization
//
//     P(Z) = [[(1+Z^dag Z)^-1,     (1+Z^dag Z)^-1 Z^dag  ],
//             [Z (1+Z^dag Z)^-1,   Z (1+Z^dag Z)^-1 Z^dag]]
//
// For the JC projector Z = (R(N)+theta)^-1 a^dagger = a^dagger (R(N+1)+theta)^-1,
// and its classical limit is Z_c = (x + iy) / (r + z).

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "hjc/block_operator.hpp"
#include "hjc/config.hpp"
#include "hjc/fock.hpp"
#include "hjc/jc_core.hpp"

namespace hjc {

struct LocalCoordinate {
  FockOperator z;                  // shifted (regular) form, subdiagonal only
  FockOperator z_left;             // (R(N)+theta)^-1 a^dagger
  double theta = 0.0;
  std::vector<double> shifts;      // R(n) + theta per level
  double two_form_residual = 0.0;  // max |z - z_left|
};

// Throws SingularSectorError when R(n) + theta <= tol.sector_eps for some
// level n < d (level 0 for theta < 0).
LocalCoordinate local_coordinate(const JCParams& p, const Tolerances& tol = kDefaultTolerances);

BlockOperator oike_projector(const FockOperator& z);
inline BlockOperator oike_projector(const LocalCoordinate& c) { return oike_projector(c.z); }

// [[1, -Z^dag], [Z, 1]] diag(1, 0) [[1, -Z^dag], [Z, 1]]^-1 with the inverse
// taken densely.
BlockOperator oike_projector_direct(const FockOperator& z);

// max |[[1,-Z^dag],[Z,1]]^-1 - diag((1+Z^dag Z)^-1, (1+Z Z^dag)^-1) [[1,Z^dag],[-Z,1]]|.
double inversion_identity_residual(const FockOperator& z);

// Z_c = (x + iy) / (r + z). Throws DiracStringError when r + z <= tol.string_eps.
std::complex<double> classical_coordinate(double x, double y, double z,
                                          const Tolerances& tol = kDefaultTolerances);

// Scalar Oike formula [[1, conj(Z)], [Z, |Z|^2]] / (1 + |Z|^2).
Eigen::Matrix2cd classical_oike_projector(std::complex<double> zc);

}  // namespace hjc
