#include "hjc/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include <omp.h>

#include "hjc/errors.hpp"
#include "hjc/oracle.hpp"

namespace hjc::sweep {

namespace {

// Runs body(i) for i in [0, n). The serial branch is the reference path.
template <class Body>
void for_each_item(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }

double worst(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

}  // namespace

int parallel_threads() { return omp_get_max_threads(); }

// ----------------------------------------------------------- algebra

std::vector<AlgebraSample> draw_algebra_samples(AlgebraTag tag, int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("draw_algebra_samples: negative count");
  std::mt19937_64 rng(stream_seed(seed, 0x100 + static_cast<std::uint64_t>(tag)));
  std::vector<AlgebraSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    AlgebraElement a = random_element(tag, rng);
    AlgebraElement b = random_element(tag, rng);
    AlgebraElement c = random_element(tag, rng);
    out.push_back({std::move(a), std::move(b), std::move(c)});
  }
  return out;
}

AlgebraCheck algebra_check(AlgebraTag tag, std::span<const AlgebraSample> samples, Exec exec) {
  const std::size_t n = samples.size();
  std::vector<double> normm(n), conjm(n), assoc(n), alt(n), inv(n), single(n);
  const AlgebraElement one = AlgebraElement::real(tag, 1.0);

  for_each_item(n, exec, [&](std::size_t i) {
    const auto& [a, b, c] = samples[i];
    const AlgebraElement ab = a * b;
    const double na = norm_sq(a), nb = norm_sq(b);
    normm[i] = std::abs(norm_sq(ab) - na * nb) / (na * nb);
    conjm[i] = max_abs(conj(ab) - conj(b) * conj(a));
    assoc[i] = max_abs(associator(a, b, c));
    alt[i] = std::max(max_abs(a * ab - (a * a) * b), max_abs(ab * b - a * (b * b)));
    inv[i] = max_abs(a * inverse(a) - one);

    // Words in a single element: powers and conjugates must commute and
    // associate. Errors are taken relative to the word magnitude.
    const AlgebraElement a2 = a * a;
    const AlgebraElement a3 = a2 * a;
    const AlgebraElement ac = conj(a);
    const double s2 = norm(a2), s3 = norm(a3), s5 = s2 * s3;
    double e = rel(max_abs(a * a2 - a2 * a), s3);
    e = std::max(e, rel(max_abs(a2 * a3 - a3 * a2), s5));
    e = std::max(e, rel(max_abs((a * a2) * a3 - a * (a2 * a3)), s5 * norm(a)));
    e = std::max(e, rel(max_abs(a * ac - ac * a), na));
    e = std::max(e, rel(max_abs((ac * a) * a2 - ac * (a * a2)), na * s2));
    e = std::max(e, rel(max_abs((a2 * ac) * a - a2 * (ac * a)), na * s2));
    single[i] = e;
  });

  return {tag,        static_cast<int>(n), worst(normm), worst(conjm), worst(assoc),
          worst(alt), worst(inv),          worst(single)};
}

// ------------------------------------------------------------- berry

std::vector<LabeledPoint> berry_grid(AlgebraTag tag, double z_min, double z_max, int z_steps,
                                     double w_min, double w_max, int w_steps) {
  if (z_steps < 1 || w_steps < 1) throw std::invalid_argument("berry_grid: empty grid");
  if (!(z_min <= z_max) || !(w_min <= w_max) || w_min < 0.0) {
    throw std::invalid_argument("berry_grid: need z_min <= z_max and 0 <= w_min <= w_max");
  }
  auto lin = [](double lo, double hi, int steps, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  };
  const AlgebraElement u = diagonal_direction(tag);
  std::vector<LabeledPoint> out;
  out.reserve(static_cast<std::size_t>(z_steps * w_steps));
  for (int iw = 0; iw < w_steps; ++iw) {
    const double s = lin(w_min, w_max, w_steps, iw);
    for (int iz = 0; iz < z_steps; ++iz) {
      out.push_back({BasePoint(s * u, lin(z_min, z_max, z_steps, iz)), "grid"});
    }
  }
  return out;
}

std::vector<LabeledPoint> berry_random(AlgebraTag tag, int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("berry_random: negative count");
  std::mt19937_64 rng(stream_seed(seed, 0x200 + static_cast<std::uint64_t>(tag)));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<LabeledPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    AlgebraElement w = random_element(tag, rng);
    out.push_back({BasePoint(std::move(w), normal(rng)), "random"});
  }
  return out;
}

namespace {

ChartCheck check_chart(const BasePoint& p, const Matrix2K& h, const Matrix2K& proj,
                       const ClassicalDecomposition& dec) {
  ChartCheck c;
  c.reconstruction = max_abs_diff(h, reconstruct(dec));
  c.unitarity = unitarity_residual(dec.unitary);
  const Matrix2K hu = h * dec.unitary;
  const AlgebraElement r = AlgebraElement::real(p.tag(), p.r());
  c.eigenvector = std::max(max_abs(hu(0, 0) - r * dec.unitary(0, 0)),
                           max_abs(hu(1, 0) - r * dec.unitary(1, 0)));
  const AlgebraTag t = p.tag();
  c.projector = max_abs_diff(dec.unitary * basic_projector(t) * dec.unitary.adjoint(), proj);
  return c;
}

BerryRecord evaluate_point(std::size_t index, const LabeledPoint& lp, const Tolerances& tol) {
  const BasePoint& p = lp.point;
  BerryRecord rec;
  rec.index = index;
  rec.source = lp.source;
  rec.w = p.w();
  rec.w_norm = p.norm_w();
  rec.z = p.z();
  rec.point_class = classify_point(p, tol);
  rec.conditioning_I = chart_conditioning(p, ChartTag::I, tol);
  rec.conditioning_II = chart_conditioning(p, ChartTag::II, tol);

  try {
    const Matrix2K h = build_hamiltonian(p);
    std::optional<Matrix2K> proj;
    try {
      proj = projector(p, tol);
      rec.projector_idempotency = idempotency_residual(*proj);
      rec.projector_hermiticity = hermiticity_residual(*proj);
      rec.projector_max_entry = max_abs(*proj);
    } catch (const DiracStringError&) {
      rec.projector_raised = true;
    }

    auto run_chart = [&](ChartTag chart, std::optional<ChartCheck>& slot, bool& raised) {
      try {
        const auto dec = chart_decompose(p, chart, tol);
        slot = check_chart(p, h, proj.value(), dec);
      } catch (const DiracStringError&) {
        raised = true;
      }
    };
    run_chart(ChartTag::I, rec.chart_I, rec.chart_I_raised);
    run_chart(ChartTag::II, rec.chart_II, rec.chart_II_raised);

    if (rec.point_class == PointClass::Regular) {
      const Matrix2K u1 = chart_unitary(p, ChartTag::I, tol);
      const Matrix2K u2 = chart_unitary(p, ChartTag::II, tol);
      rec.cocycle = max_abs_diff(u2, u1 * transition_function(p, tol));
    }
  } catch (const std::exception& ex) {
    rec.error = ex.what();
  }

  const double eps = tol.algebraic;
  bool ok = rec.error.empty();
  ok = ok && rec.chart_I_raised == !chart_admits(ChartTag::I, rec.point_class);
  ok = ok && rec.chart_II_raised == !chart_admits(ChartTag::II, rec.point_class);
  ok = ok && rec.projector_raised == (rec.point_class == PointClass::Origin);
  for (const auto* c : {&rec.chart_I, &rec.chart_II}) {
    if (*c) {
      ok = ok && (*c)->reconstruction <= eps && (*c)->unitarity <= eps &&
           (*c)->eigenvector <= eps && (*c)->projector <= eps;
    }
  }
  if (rec.cocycle) ok = ok && *rec.cocycle <= eps;
  if (rec.projector_idempotency) {
    ok = ok && *rec.projector_idempotency <= eps && *rec.projector_hermiticity <= eps &&
         *rec.projector_max_entry <= 1.0 + eps;
  }
  rec.pass = ok;
  return rec;
}

}  // namespace

std::vector<BerryRecord> berry_sweep(std::span<const LabeledPoint> points, const Tolerances& tol,
                                     Exec exec) {
  std::vector<BerryRecord> out(points.size());
  for_each_item(points.size(), exec,
                [&](std::size_t i) { out[i] = evaluate_point(i, points[i], tol); });
  return out;
}

// ---------------------------------------------------------------- jc

namespace {

std::vector<SectorEntry> expected_ground_entries(double theta, const SectorReport& report) {
  std::vector<SectorEntry> out;
  for (const auto& e : report.entries) {
    if (e.row != 2 || e.level != 0) continue;
    const bool expect = theta == 0.0 || (theta > 0.0 ? e.chart == ChartTag::II : e.chart == ChartTag::I);
    if (expect) out.push_back(e);
  }
  return out;
}

JCRecord evaluate_theta(double theta, int dim, const Tolerances& tol) {
  JCRecord rec;
  rec.theta = theta;
  rec.dim = dim;
  try {
    JCParams p;
    p.theta = theta;
    p.dim = dim;
    const BlockOperator h = build_h_jc(p);
    const QuantumProjector proj = projector_jc(p, NormalizerSide::Left, tol);
    const QuantumProjector proj_r = projector_jc(p, NormalizerSide::Right, tol);
    rec.ground_pseudo_inverse = proj.ground_pseudo_inverse;

    BlockOperator p0 = BlockOperator::diag(FockOperator::identity(dim), FockOperator::zero(dim));
    for (ChartTag chart : {ChartTag::I, ChartTag::II}) {
      try {
        const QuantumDecomposition dec = final_decompose(p, chart, tol);
        const BlockOperator& v = dec.unitary;
        const BlockOperator vr = build_V(p, chart, NormalizerSide::Right, tol);
        rec.decomposition = std::max(rec.decomposition, residual(reconstruct(dec), h, 2));
        rec.unitarity = std::max(
            rec.unitarity, residual(v.adjoint() * v, BlockOperator::identity(dim), 1));
        rec.ordering = std::max(rec.ordering, residual(v, vr, 0));
        rec.projector_vs_chart =
            std::max(rec.projector_vs_chart, residual(v * p0 * v.adjoint(), proj.op, 1));
        rec.admissible.push_back(chart);
      } catch (const SingularSectorError& ex) {
        rec.inadmissible.insert(rec.inadmissible.end(), ex.entries().begin(), ex.entries().end());
      }
    }

    const auto es = oracle::eig_hermitian(h.flat());
    const auto predicted = sector_spectrum(p);
    for (std::size_t k = 0; k < predicted.size(); ++k) {
      rec.eigenvalues = std::max(rec.eigenvalues,
                                 std::abs(es.values(static_cast<Eigen::Index>(k)) - predicted[k].value));
    }

    rec.projector_idempotency = residual(proj.op * proj.op, proj.op, 1);
    rec.projector_hermiticity = residual(proj.op, proj.op.adjoint(), 1);
    rec.projector_ordering = residual(proj.op, proj_r.op, 1);

    const SpectralParts parts = spectral_decompose(p, tol);
    rec.spectral = residual(parts.plus + parts.minus, h, 2);
    rec.spectral_commutator = residual(parts.lambda * proj.op, proj.op * parts.lambda, 0);

    const TwoStepFactorization ts = two_step_factorize(p);
    Eigen::MatrixXcd diff = (ts.outer * ts.middle * ts.outer_adjoint - h).flat();
    const int g0 = flat_index(1, 0, dim);
    rec.two_step_ground_defect = std::abs(diff(g0, g0));
    diff(g0, g0) = 0.0;
    rec.two_step_off_ground = oracle::restrict_blocks(diff, 1, 2).cwiseAbs().maxCoeff();

    const auto expected = expected_ground_entries(theta, singular_sectors(p, tol));
    bool ok = rec.inadmissible == expected;
    ok = ok && rec.decomposition <= tol.decomposition && rec.unitarity <= tol.algebraic &&
         rec.ordering <= tol.algebraic && rec.eigenvalues <= tol.decomposition &&
         rec.projector_idempotency <= tol.algebraic &&
         rec.projector_hermiticity <= tol.algebraic && rec.projector_ordering <= tol.algebraic &&
         rec.projector_vs_chart <= tol.algebraic && rec.spectral <= tol.decomposition &&
         rec.spectral_commutator <= tol.algebraic && rec.two_step_off_ground <= tol.algebraic;
    rec.pass = ok;
  } catch (const std::exception& ex) {
    rec.error = ex.what();
    rec.pass = false;
  }
  return rec;
}

}  // namespace

std::vector<JCRecord> jc_sweep(std::span<const double> thetas, int dim, const Tolerances& tol,
                               Exec exec) {
  std::vector<JCRecord> out(thetas.size());
  for_each_item(thetas.size(), exec,
                [&](std::size_t i) { out[i] = evaluate_theta(thetas[i], dim, tol); });
  return out;
}

// ------------------------------------------------------------ strings

std::vector<StringsRecord> strings_sweep(std::span<const double> thetas, int dim,
                                         const Tolerances& tol, Exec exec) {
  std::vector<StringsRecord> out(thetas.size());
  for_each_item(thetas.size(), exec, [&](std::size_t i) {
    JCParams p;
    p.theta = thetas[i];
    p.dim = dim;
    StringsRecord rec{singular_sectors(p, tol), false};
    rec.matches_ground_claim = rec.report.singular() == expected_ground_entries(p.theta, rec.report);
    out[i] = std::move(rec);
  });
  return out;
}

// ------------------------------------------------------------- evolve

std::vector<double> time_grid(double t_max, int steps) {
  if (steps < 1) throw std::invalid_argument("time_grid: need at least one time point");
  if (!std::isfinite(t_max) || t_max < 0.0) throw std::invalid_argument("time_grid: need t_max >= 0");
  std::vector<double> t(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) t[static_cast<std::size_t>(k)] = steps == 1 ? 0.0 : t_max * k / (steps - 1);
  return t;
}

std::vector<EvolvePoint> evolve_series(const JCParams& p, std::span<const double> times, int n0,
                                       Exec exec) {
  p.validate();
  if (n0 < 0 || n0 > p.dim - 3) {
    throw std::invalid_argument("evolve_series: initial level must lie in the safe subspace [0, d-3]");
  }
  const int d = p.dim;
  const oracle::HermitianExponential jc_exp(build_h_jc(p).flat());
  std::optional<oracle::HermitianExponential> lab_exp;
  if (p.omega && p.delta) lab_exp.emplace(build_lab_hamiltonian(p).flat());
  const Eigen::VectorXcd psi0 = basis_state(0, n0, d);
  const BlockOperator id = BlockOperator::identity(d);

  std::vector<EvolvePoint> out(times.size());
  for_each_item(times.size(), exec, [&](std::size_t i) {
    const double t = times[i];
    const BlockOperator u = propagator_closed_form(p, t);
    EvolvePoint pt;
    pt.t = t;
    pt.closed_vs_oracle = oracle::residual(u.flat(), jc_exp(p.g * t), 2, 2).value;
    pt.unitarity = residual(u.adjoint() * u, id, 1);
    if (lab_exp) pt.full_vs_oracle = oracle::residual(propagator_full(p, t).flat(), (*lab_exp)(t), 2, 2).value;
    pt.inversion = atomic_inversion(u.flat() * psi0, d);
    out[i] = pt;
  });
  return out;
}

// ---------------------------------------------------------- grassmann

GrassmannRecord evaluate_grassmann(double theta, int dim, const Tolerances& tol) {
  GrassmannRecord rec;
  rec.theta = theta;
  rec.dim = dim;
  JCParams p;
  p.theta = theta;
  p.dim = dim;
  try {
    const LocalCoordinate z = local_coordinate(p, tol);
    const BlockOperator oike = oike_projector(z);
    rec.roundtrip = residual(oike, projector_jc(p, NormalizerSide::Left, tol).op, 1);
    rec.two_form = z.two_form_residual;
    rec.inversion_identity = inversion_identity_residual(z.z);
    const FockOperator expected = func_of_number(dim, [theta](double n) {
      return radius_plus(n + 1, theta) / (2.0 * radius(n + 1, theta));
    });
    rec.upper_block = restrict(oike.block(0, 0) - expected, SafeSubspace(dim, 1)).matrix().cwiseAbs().maxCoeff();
    rec.pass = *rec.roundtrip <= tol.decomposition && *rec.two_form <= tol.algebraic &&
               *rec.inversion_identity <= tol.algebraic && *rec.upper_block <= tol.algebraic;
  } catch (const SingularSectorError& ex) {
    for (const auto& e : ex.entries()) rec.singular_levels.push_back(e.level);
    rec.pass = theta <= 0.0 && rec.singular_levels == std::vector<int>{0};
  } catch (const std::exception& ex) {
    rec.error = ex.what();
    rec.pass = false;
  }
  return rec;
}

std::vector<GrassmannRecord> grassmann_sweep(std::span<const double> thetas, int dim,
                                             const Tolerances& tol, Exec exec) {
  std::vector<GrassmannRecord> out(thetas.size());
  for_each_item(thetas.size(), exec,
                [&](std::size_t i) { out[i] = evaluate_grassmann(thetas[i], dim, tol); });
  return out;
}

double classical_coordinate_check(int count, std::uint64_t seed, double min_r_plus_z, Exec exec) {
  std::mt19937_64 rng(stream_seed(seed, 0x300));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::array<double, 3>> pts;
  pts.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(pts.size()) < count) {
    const double x = normal(rng), y = normal(rng), z = normal(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r + z > min_r_plus_z) pts.push_back({x, y, z});
  }
  std::vector<double> err(pts.size());
  for_each_item(pts.size(), exec, [&](std::size_t i) {
    const auto [x, y, z] = pts[i];
    const Eigen::Matrix2cd oike = classical_oike_projector(classical_coordinate(x, y, z));
    const Eigen::Matrix2cd berry =
        to_complex(projector(BasePoint(AlgebraElement(AlgebraTag::C, {x, y}), z)));
    err[i] = (oike - berry).cwiseAbs().maxCoeff();
  });
  return worst(err);
}

}  // namespace hjc::sweep
