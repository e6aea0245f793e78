#include "hjc/jc_core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace hjc {

namespace {

using DiagFn = std::function<double(double)>;

FockOperator diag_fn(int d, const DiagFn& f) { return func_of_number(d, f); }

FockOperator complex_diag(int d, const std::function<cplx(double)>& f) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n < d; ++n) m(n, n) = f(static_cast<double>(n));
  return FockOperator(std::move(m));
}

double chart_shift(double n, double theta, ChartTag chart) noexcept {
  return chart == ChartTag::I ? radius_plus(n, theta) : radius_minus(n, theta);
}

double chart_denominator(double n, double theta, ChartTag chart) noexcept {
  return 2.0 * radius(n, theta) * chart_shift(n, theta, chart);
}

SectorEntry make_entry(ChartTag chart, int row, int level, double theta, const Tolerances& tol) {
  const double m = row == 1 ? level + 1.0 : static_cast<double>(level);
  const double den = chart_denominator(m, theta, chart);
  SectorEntry e;
  e.chart = chart;
  e.row = row;
  e.level = level;
  e.denominator = den;
  e.singular = den <= tol.sector_eps;
  e.ill_conditioned = !e.singular && den < tol.ill_conditioned;
  return e;
}

std::vector<SectorEntry> chart_entries(const JCParams& p, ChartTag chart, const Tolerances& tol) {
  std::vector<SectorEntry> out;
  out.reserve(static_cast<std::size_t>(2 * p.dim));
  for (int row = 1; row <= 2; ++row)
    for (int n = 0; n < p.dim; ++n) out.push_back(make_entry(chart, row, n, p.theta, tol));
  return out;
}

std::string describe(const std::vector<SectorEntry>& singular) {
  std::string s;
  for (const auto& e : singular) {
    if (!s.empty()) s += ", ";
    s += "(chart " + std::string(to_string(e.chart)) + ", row " + std::to_string(e.row) +
         ", level " + std::to_string(e.level) + ")";
  }
  return s;
}

// 1/sqrt(2R(m)(R(m) +/- theta)), or 0 where that denominator is singular.
DiagFn normalizer(double theta, ChartTag chart, int offset, const Tolerances& tol) {
  return [=](double n) {
    const double den = chart_denominator(n + offset, theta, chart);
    return den <= tol.sector_eps ? 0.0 : 1.0 / std::sqrt(den);
  };
}

BlockOperator chart_operator(const JCParams& p, ChartTag chart, NormalizerSide side,
                             const Tolerances& tol) {
  const int d = p.dim;
  const double th = p.theta;
  const FockOperator a = annihilation(d);
  const FockOperator ad = creation(d);
  const FockOperator n_up = diag_fn(d, normalizer(th, chart, 1, tol));
  const FockOperator n_lo = diag_fn(d, normalizer(th, chart, 0, tol));

  BlockOperator core = BlockOperator::zero(d);
  if (chart == ChartTag::I) {
    core = BlockOperator(diag_fn(d, [th](double n) { return radius_plus(n + 1, th); }), -a, ad,
                         diag_fn(d, [th](double n) { return radius_plus(n, th); }));
  } else {
    core = BlockOperator(a, diag_fn(d, [th](double n) { return -radius_minus(n + 1, th); }),
                         diag_fn(d, [th](double n) { return radius_minus(n, th); }), ad);
  }

  if (side == NormalizerSide::Left) return BlockOperator::diag(n_up, n_lo) * core;
  // Moving the normalizer through a or a^dagger shifts its argument; for
  // chart II the two diagonal slots trade places.
  return chart == ChartTag::I ? core * BlockOperator::diag(n_up, n_lo)
                              : core * BlockOperator::diag(n_lo, n_up);
}

DiagFn pinv_of(const DiagFn& f, const Tolerances& tol) {
  return [f, tol](double n) {
    const double v = f(n);
    return std::abs(v) <= tol.pinv_eps ? 0.0 : 1.0 / v;
  };
}

}  // namespace

// ---------------------------------------------------------------- params

JCParams JCParams::from_physical(double omega, double delta, double g, int dim) {
  if (g == 0.0) throw std::invalid_argument("JCParams: g = 0 leaves theta undefined");
  JCParams p;
  p.omega = omega;
  p.delta = delta;
  p.g = g;
  p.theta = (delta - omega) / (2.0 * g);
  p.dim = dim;
  p.validate();
  return p;
}

void JCParams::validate() const {
  if (dim < 2) throw std::invalid_argument("JCParams: Fock dimension must be >= 2");
  if (!std::isfinite(theta) || !std::isfinite(g)) {
    throw std::invalid_argument("JCParams: theta and g must be finite");
  }
  if (omega && delta) {
    if (g == 0.0) throw std::invalid_argument("JCParams: g = 0 leaves theta undefined");
    const double expected = (*delta - *omega) / (2.0 * g);
    if (std::abs(expected - theta) > 1e-12 * std::max(1.0, std::abs(theta))) {
      throw std::invalid_argument("JCParams: theta disagrees with (delta - omega) / 2g");
    }
  }
}

double radius(double n, double theta) noexcept { return std::sqrt(n + theta * theta); }

double radius_plus(double n, double theta) noexcept {
  if (theta >= 0.0) return radius(n, theta) + theta;
  const double rm = radius(n, theta) - theta;
  return rm > 0.0 ? n / rm : 0.0;
}

double radius_minus(double n, double theta) noexcept { return radius_plus(n, -theta); }

// ---------------------------------------------------------- sector report

std::vector<SectorEntry> SectorReport::singular() const {
  std::vector<SectorEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
               [](const SectorEntry& e) { return e.singular; });
  return out;
}

std::vector<SectorEntry> SectorReport::singular(ChartTag chart) const {
  std::vector<SectorEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
               [chart](const SectorEntry& e) { return e.singular && e.chart == chart; });
  return out;
}

std::vector<int> SectorReport::string_levels() const {
  std::set<int> levels;
  for (const auto& e : entries)
    if (e.singular) levels.insert(e.level);
  return {levels.begin(), levels.end()};
}

SectorReport singular_sectors(const JCParams& p, const Tolerances& tol) {
  p.validate();
  SectorReport r;
  r.theta = p.theta;
  r.dim = p.dim;
  for (ChartTag c : {ChartTag::I, ChartTag::II}) {
    auto e = chart_entries(p, c, tol);
    r.entries.insert(r.entries.end(), e.begin(), e.end());
  }
  return r;
}

std::vector<LatticeSite> string_lattice(const SectorReport& report, int levels) {
  if (levels < 1 || levels > report.dim) {
    throw std::invalid_argument("string_lattice: levels must lie in [1, dim]");
  }
  const std::vector<int> strings = report.string_levels();
  auto is_string = [&](int n) { return std::find(strings.begin(), strings.end(), n) != strings.end(); };
  std::vector<LatticeSite> out;
  out.reserve(static_cast<std::size_t>(levels * levels));
  for (int m = 0; m < levels; ++m)
    for (int n = 0; n < levels; ++n) out.push_back({m, n, is_string(m) || is_string(n)});
  return out;
}

// ------------------------------------------------------------ hamiltonians

BlockOperator build_h_jc(const JCParams& p) {
  p.validate();
  const int d = p.dim;
  const FockOperator th = cplx(p.theta) * FockOperator::identity(d);
  return BlockOperator(th, annihilation(d), creation(d), -th);
}

SplitHamiltonian build_full_hamiltonian(const JCParams& p) {
  if (!p.omega || !p.delta) {
    throw std::invalid_argument("build_full_hamiltonian: omega and delta are required");
  }
  if (p.g == 0.0) throw std::invalid_argument("build_full_hamiltonian: g = 0 leaves theta undefined");
  p.validate();
  const int d = p.dim;
  const double w = *p.omega;
  const FockOperator id = FockOperator::identity(d);
  const FockOperator nw = cplx(w) * number(d);
  BlockOperator h1 = BlockOperator::diag(nw + cplx(w / 2) * id, nw - cplx(w / 2) * id);
  BlockOperator h2 = cplx(p.g) * build_h_jc(p);
  return {std::move(h1), std::move(h2)};
}

BlockOperator build_lab_hamiltonian(const JCParams& p) {
  if (!p.omega || !p.delta) {
    throw std::invalid_argument("build_lab_hamiltonian: omega and delta are required");
  }
  const int d = p.dim;
  const FockOperator id = FockOperator::identity(d);
  const FockOperator nw = cplx(*p.omega) * number(d);
  const cplx half_delta = *p.delta / 2.0;
  return BlockOperator(nw + half_delta * id, cplx(p.g) * annihilation(d),
                       cplx(p.g) * creation(d), nw - half_delta * id);
}

// -------------------------------------------------------------- two-step

TwoStepFactorization two_step_factorize(const JCParams& p) {
  p.validate();
  const int d = p.dim;
  const FockOperator id = FockOperator::identity(d);
  const FockOperator inv_sqrt = diag_fn(d, [](double n) { return 1.0 / std::sqrt(n + 1.0); });
  const FockOperator sqrt_n1 = diag_fn(d, [](double n) { return std::sqrt(n + 1.0); });
  const FockOperator th = cplx(p.theta) * id;

  BlockOperator outer = BlockOperator::diag(id, creation(d) * inv_sqrt);
  BlockOperator outer_adj = BlockOperator::diag(id, inv_sqrt * annihilation(d));
  return {std::move(outer), BlockOperator(th, sqrt_n1, sqrt_n1, -th), std::move(outer_adj)};
}

BlockOperator middle_unitaries(const JCParams& p, ChartTag chart, const Tolerances& tol) {
  p.validate();
  std::vector<SectorEntry> bad;
  for (int n = 0; n < p.dim; ++n) {
    auto e = make_entry(chart, 1, n, p.theta, tol);
    if (e.singular) bad.push_back(e);
  }
  if (!bad.empty()) {
    throw SingularSectorError(bad, "middle_unitaries: vanishing normalization at " + describe(bad));
  }
  const int d = p.dim;
  const double th = p.theta;
  const FockOperator nrm = diag_fn(d, normalizer(th, chart, 1, tol));
  const FockOperator sq = diag_fn(d, [](double n) { return std::sqrt(n + 1.0); });
  if (chart == ChartTag::I) {
    const FockOperator rp = diag_fn(d, [th](double n) { return radius_plus(n + 1, th); });
    return BlockOperator(nrm * rp, -(nrm * sq), nrm * sq, nrm * rp);
  }
  const FockOperator rm = diag_fn(d, [th](double n) { return radius_minus(n + 1, th); });
  return BlockOperator(nrm * sq, -(nrm * rm), nrm * rm, nrm * sq);
}

// ---------------------------------------------------------------- charts

BlockOperator build_V(const JCParams& p, ChartTag chart, NormalizerSide side,
                      const Tolerances& tol) {
  p.validate();
  std::vector<SectorEntry> bad;
  for (const auto& e : chart_entries(p, chart, tol))
    if (e.singular) bad.push_back(e);
  if (!bad.empty()) {
    throw SingularSectorError(bad, "chart " + std::string(to_string(chart)) +
                                       " hits a quantum Dirac string at " + describe(bad));
  }
  return chart_operator(p, chart, side, tol);
}

PartialChart build_V_partial(const JCParams& p, ChartTag chart, const Tolerances& tol) {
  p.validate();
  PartialChart out{chart_operator(p, chart, NormalizerSide::Left, tol), {}};
  for (const auto& e : chart_entries(p, chart, tol))
    if (e.singular) out.masked.push_back(e);
  return out;
}

BlockOperator chart_eigenvalues(const JCParams& p, ChartTag chart) {
  const int d = p.dim;
  const double th = p.theta;
  const FockOperator r_n = diag_fn(d, [th](double n) { return radius(n, th); });
  const FockOperator r_n1 = diag_fn(d, [th](double n) { return radius(n + 1, th); });
  return chart == ChartTag::I ? BlockOperator::diag(r_n1, -r_n) : BlockOperator::diag(r_n, -r_n1);
}

QuantumDecomposition final_decompose(const JCParams& p, ChartTag chart, const Tolerances& tol) {
  BlockOperator v = build_V(p, chart, NormalizerSide::Left, tol);
  return {std::move(v), chart_eigenvalues(p, chart), chart, singular_sectors(p, tol)};
}

BlockOperator reconstruct(const QuantumDecomposition& d) {
  return d.unitary * d.diagonal * d.unitary.adjoint();
}

BlockOperator transition_operator(int d) {
  const FockOperator inv_sqrt = diag_fn(d, [](double n) { return 1.0 / std::sqrt(n + 1.0); });
  return BlockOperator::diag(inv_sqrt * annihilation(d), creation(d) * inv_sqrt);
}

BlockOperator transition_operator_pinv(int d, const Tolerances& tol) {
  const FockOperator pinv_sqrt =
      pseudo_diag_inverse(diag_fn(d, [](double n) { return std::sqrt(n); }), tol);
  return BlockOperator::diag(annihilation(d) * pinv_sqrt, pinv_sqrt * creation(d));
}

// -------------------------------------------------------------- projector

BlockOperator energy_scale(const JCParams& p) {
  const double th = p.theta;
  return BlockOperator::diag(diag_fn(p.dim, [th](double n) { return radius(n + 1, th); }),
                             diag_fn(p.dim, [th](double n) { return radius(n, th); }));
}

QuantumProjector projector_jc(const JCParams& p, NormalizerSide side, const Tolerances& tol) {
  p.validate();
  const int d = p.dim;
  const double th = p.theta;
  const BlockOperator core(diag_fn(d, [th](double n) { return radius_plus(n + 1, th); }),
                           annihilation(d), creation(d),
                           diag_fn(d, [th](double n) { return radius_minus(n, th); }));
  const BlockOperator nrm = BlockOperator::diag(
      diag_fn(d, pinv_of([th](double n) { return 2.0 * radius(n + 1, th); }, tol)),
      diag_fn(d, pinv_of([th](double n) { return 2.0 * radius(n, th); }, tol)));
  QuantumProjector out{side == NormalizerSide::Left ? nrm * core : core * nrm,
                       2.0 * radius(0, th) <= tol.pinv_eps};
  return out;
}

SpectralParts spectral_decompose(const JCParams& p, const Tolerances& tol) {
  const QuantumProjector proj = projector_jc(p, NormalizerSide::Left, tol);
  BlockOperator lambda = energy_scale(p);
  BlockOperator plus = lambda * proj.op;
  BlockOperator minus = cplx(-1.0) * (lambda * (BlockOperator::identity(p.dim) - proj.op));
  return {std::move(plus), std::move(minus), std::move(lambda), proj.ground_pseudo_inverse};
}

// ------------------------------------------------------------- propagator

BlockOperator propagator_closed_form(const JCParams& p, double t) {
  p.validate();
  const int d = p.dim;
  const double th = p.theta;
  const double gt = p.g * t;
  auto sin_over = [gt](double r) { return r == 0.0 ? gt : std::sin(gt * r) / r; };
  const cplx i(0.0, 1.0);

  const FockOperator upper = complex_diag(d, [&](double n) {
    const double r = radius(n + 1, th);
    return std::cos(gt * r) - i * th * sin_over(r);
  });
  const FockOperator lower = complex_diag(d, [&](double n) {
    const double r = radius(n, th);
    return std::cos(gt * r) + i * th * sin_over(r);
  });
  const FockOperator s_up = diag_fn(d, [&](double n) { return sin_over(radius(n + 1, th)); });
  const FockOperator s_lo = diag_fn(d, [&](double n) { return sin_over(radius(n, th)); });
  return BlockOperator(upper, -i * (s_up * annihilation(d)), -i * (s_lo * creation(d)), lower);
}

BlockOperator propagator_full(const JCParams& p, double t) {
  if (!p.omega || !p.delta) {
    throw std::invalid_argument("propagator_full: omega and delta are required");
  }
  if (p.g == 0.0) throw std::invalid_argument("propagator_full: g = 0 leaves theta undefined");
  const int d = p.dim;
  const double w = *p.omega;
  const cplx i(0.0, 1.0);
  const BlockOperator free = BlockOperator::diag(
      complex_diag(d, [&](double n) { return std::exp(-i * t * (w * n + w / 2)); }),
      complex_diag(d, [&](double n) { return std::exp(-i * t * (w * n - w / 2)); }));
  return free * propagator_closed_form(p, t);
}

Eigen::VectorXcd basis_state(int atom, int n, int d) {
  if (atom < 0 || atom > 1 || n < 0 || n >= d) throw std::out_of_range("basis_state");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * d);
  v(flat_index(atom, n, d)) = 1.0;
  return v;
}

double atomic_inversion(const Eigen::VectorXcd& psi, int d) {
  if (psi.size() != 2 * d) throw std::invalid_argument("atomic_inversion: state size mismatch");
  return psi.head(d).squaredNorm() - psi.tail(d).squaredNorm();
}

std::vector<SpectrumEntry> sector_spectrum(const JCParams& p) {
  std::vector<SpectrumEntry> out;
  for (int n = 1; n < p.dim; ++n) {
    const double r = radius(n, p.theta);
    out.push_back({r, true});
    out.push_back({-r, true});
  }
  out.push_back({-p.theta, false});
  out.push_back({p.theta, false});
  std::sort(out.begin(), out.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
  return out;
}

}  // namespace hjc
