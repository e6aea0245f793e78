// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here and deliberately not taken from
// Tolerances defaults so that changing a default cannot loosen a criterion.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hjc/errors.hpp"
#include "hjc/fock.hpp"
#include "hjc/grassmann.hpp"
#include "hjc/hopf_berry.hpp"
#include "hjc/jc_core.hpp"
#include "hjc/json_io.hpp"
#include "hjc/oracle.hpp"
#include "hjc/sweep.hpp"

#ifndef HJC_CLI_PATH
#error "HJC_CLI_PATH must point at the hjc executable"
#endif

using namespace hjc;
using sweep::Exec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.2e", key.c_str(), value);
    info += (info.empty() ? "" : " ") + std::string(buf);
  }
  std::string info;
};

JCParams params(double theta, int dim) {
  JCParams p;
  p.theta = theta;
  p.dim = dim;
  return p;
}

template <class E, class F>
bool raises(F&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

// ------------------------------------------------------------------ 1

Outcome composition_algebras() {
  Outcome o;
  double nm = 0, cj = 0, alt = 0;
  for (AlgebraTag t : kAllAlgebras) {
    const auto samples = sweep::draw_algebra_samples(t, 1000, 1);
    const auto c = sweep::algebra_check(t, samples, Exec::Parallel);
    nm = std::max(nm, c.norm_multiplicativity);
    cj = std::max(cj, c.conjugation);
    alt = std::max(alt, c.alternativity);
  }
  o.require(nm <= 1e-12, "norm multiplicativity");
  o.require(cj <= 1e-13, "conjugation anti-homomorphism");
  o.require(alt <= 1e-12, "alternativity");
  const auto triple = find_nonassociative_triple(AlgebraTag::O);
  o.require(triple.has_value(), "octonion nonassociative basis triple");
  o.note("norm_mult", nm);
  o.note("conj", cj);
  o.note("alt", alt);
  if (triple) o.note("assoc(e" + std::to_string(triple->i) + ",e" + std::to_string(triple->j) + ",e" +
                         std::to_string(triple->k) + ")", triple->associator_norm);
  return o;
}

// ------------------------------------------------------------------ 2

Outcome classical_charts() {
  Outcome o;
  double rec = 0, uni = 0, coc = 0, idem = 0, herm = 0, indep = 0;
  for (AlgebraTag t : kAllAlgebras) {
    const auto pts = sweep::berry_random(t, 100, 2);
    for (const auto& r : sweep::berry_sweep(pts, kDefaultTolerances, Exec::Parallel)) {
      o.require(r.point_class == PointClass::Regular && r.chart_I && r.chart_II && r.cocycle,
                "random point not regular");
      if (!r.chart_I || !r.chart_II || !r.cocycle) continue;
      for (const auto* c : {&*r.chart_I, &*r.chart_II}) {
        rec = std::max(rec, c->reconstruction);
        uni = std::max(uni, c->unitarity);
        indep = std::max(indep, c->projector);
      }
      coc = std::max(coc, *r.cocycle);
      idem = std::max(idem, r.projector_idempotency.value_or(INFINITY));
      herm = std::max(herm, r.projector_hermiticity.value_or(INFINITY));
    }
  }
  o.require(rec <= 1e-12, "reconstruction");
  o.require(uni <= 1e-12, "unitarity");
  o.require(coc <= 1e-12, "cocycle");
  o.require(idem <= 1e-12 && herm <= 1e-12, "projector idempotent/Hermitian");
  o.require(indep <= 1e-12, "projector chart independence");
  bool strings = true;
  for (AlgebraTag t : kAllAlgebras) {
    const AlgebraElement zero(t);
    strings = strings && raises<DiracStringError>([&] { chart_unitary(BasePoint(zero, -1.0), ChartTag::I); });
    strings = strings && raises<DiracStringError>([&] { chart_unitary(BasePoint(zero, 1.0), ChartTag::II); });
  }
  o.require(strings, "DiracStringError on the removed half-axes");
  o.note("recon", rec);
  o.note("unit", uni);
  o.note("cocycle", coc);
  o.note("idem", idem);
  o.note("herm", herm);
  o.note("chart_indep", indep);
  return o;
}

// ------------------------------------------------------------------ 3

Outcome string_divergence() {
  // The chart-I normalization 1/sqrt(2r(r+z)) is the quantity that diverges
  // on approach to the lower string; the normalized entries are bounded.
  Outcome o;
  double min_growth = INFINITY, max_proj = 0, max_unit_entry = 0;
  for (AlgebraTag t : kAllAlgebras) {
    const AlgebraElement u = diagonal_direction(t);
    std::vector<double> cond;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const BasePoint p(eps * u, -1.0);
      cond.push_back(chart_conditioning(p, ChartTag::I));
      max_proj = std::max(max_proj, max_abs(projector(p)));
      max_unit_entry = std::max(max_unit_entry, max_abs(chart_unitary(p, ChartTag::I)));
    }
    for (std::size_t k = 1; k < cond.size(); ++k) min_growth = std::min(min_growth, cond[k] / cond[k - 1]);
  }
  o.require(min_growth >= 10.0, "chart-I growth per decade");
  o.require(max_proj <= 1.0, "projector entries bounded by 1");
  o.note("min_growth_per_decade", min_growth);
  o.note("max_projector_entry", max_proj);
  o.note("max_unitary_entry", max_unit_entry);
  return o;
}

// ------------------------------------------------------------------ 4

Outcome fock_suite() {
  Outcome o;
  double ccr = 0, iso = 0, shift = 0;
  for (int d : {8, 32}) {
    const FockOperator a = annihilation(d), ad = creation(d);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(d, d);
    expected(d - 1, d - 1) = -(d - 1.0);
    const double e_ccr = ((a * ad - ad * a).matrix() - expected).cwiseAbs().maxCoeff();
    o.require(e_ccr <= roundoff_floor(d), "truncated commutator at d=" + std::to_string(d));
    ccr = std::max(ccr, e_ccr);

    const FockOperator id = FockOperator::identity(d);
    const FockOperator s = func_of_number(d, [](double n) { return 1.0 / std::sqrt(n + 1.0); }) * a;
    const double e1 = (s * s.adjoint() - (id - FockOperator::level_projector(d, d - 1))).matrix().cwiseAbs().maxCoeff();
    const double e2 = (s.adjoint() * s - (id - FockOperator::level_projector(d, 0))).matrix().cwiseAbs().maxCoeff();
    o.require(std::max(e1, e2) <= roundoff_floor(1), "partial isometry at d=" + std::to_string(d));
    iso = std::max({iso, e1, e2});

    for (double th : {0.0, 0.3, 1.0}) {
      const double e = shift_identity_check([th](double n) { return std::sqrt(n + th * th); }, d);
      shift = std::max(shift, e);
    }
  }
  o.require(shift <= 1e-13, "shift identity");
  o.note("ccr", ccr);
  o.note("isometry", iso);
  o.note("shift", shift);
  return o;
}

// ------------------------------------------------------------------ 5

const std::vector<double> kThetas{-1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0};

Outcome quantum_decomposition() {
  Outcome o;
  double dec = 0, uni = 0;
  for (const auto& r : sweep::jc_sweep(kThetas, 32, kDefaultTolerances, Exec::Parallel)) {
    o.require(r.error.empty(), "theta=" + std::to_string(r.theta) + ": " + r.error);
    o.require(r.admissible.size() == 1, "exactly one admissible chart");
    dec = std::max(dec, r.decomposition);
    uni = std::max(uni, r.unitarity);
    const ChartTag bad = r.theta > 0 ? ChartTag::II : ChartTag::I;
    o.require(r.inadmissible.size() == 1 && r.inadmissible[0].chart == bad &&
                  r.inadmissible[0].level == 0 && r.inadmissible[0].row == 2,
              "inadmissible chart fails only at level 0");
    const SectorReport rep = singular_sectors(params(r.theta, 32));
    for (const auto& site : string_lattice(rep, 6)) {
      o.require(site.black == (site.upper_level == 0 || site.lower_level == 0), "lattice black only on the axes");
    }
  }
  o.require(dec <= 1e-10, "reconstruction");
  o.require(uni <= 1e-12, "unitarity");
  o.note("recon", dec);
  o.note("unit", uni);
  return o;
}

// ------------------------------------------------------------------ 6

Outcome spectral_law() {
  Outcome o;
  const JCParams p = params(0.3, 16);
  const auto es = oracle::eig_hermitian(build_h_jc(p).flat());
  // Interior sector values +/- sqrt(n + theta^2), n = 1..15, matched in order.
  std::vector<double> oracle_vals(es.values.data(), es.values.data() + es.values.size());
  double worst = 0;
  int matched = 0;
  for (int n = 1; n < 16; ++n) {
    for (double sign : {-1.0, 1.0}) {
      const double target = sign * std::sqrt(n + 0.09);
      double best = INFINITY;
      for (double v : oracle_vals) best = std::min(best, std::abs(v - target));
      worst = std::max(worst, best);
      ++matched;
    }
  }
  const auto pred = sector_spectrum(p);
  double multiset = 0;
  for (std::size_t k = 0; k < pred.size(); ++k)
    multiset = std::max(multiset, std::abs(oracle_vals[k] - pred[k].value));
  o.require(worst <= 1e-10, "interior eigenvalues");
  o.require(multiset <= 1e-10, "full sorted multiset incl. edge values");
  o.note("interior", worst);
  o.note("multiset", multiset);
  o.info += " interior_count=" + std::to_string(matched);
  return o;
}

// ------------------------------------------------------------------ 7

Outcome projector_spectral() {
  Outcome o;
  const int d = 32;
  double idem = 0, herm = 0, admissible = 0, masked = 0, order = 0, recon = 0, comm = 0;
  const BlockOperator p0 = BlockOperator::diag(FockOperator::identity(d), FockOperator::zero(d));
  for (double th : kThetas) {
    const JCParams p = params(th, d);
    const BlockOperator pr = projector_jc(p).op;
    idem = std::max(idem, residual(pr * pr, pr, 1));
    herm = std::max(herm, residual(pr, pr.adjoint(), 1));
    order = std::max(order, residual(pr, projector_jc(p, NormalizerSide::Right).op, 1));
    const ChartTag good = th > 0 ? ChartTag::I : ChartTag::II;
    for (NormalizerSide side : {NormalizerSide::Left, NormalizerSide::Right}) {
      const BlockOperator v = build_V(p, good, side);
      admissible = std::max(admissible, residual(v * p0 * v.adjoint(), pr, 1));
    }
    if (th > 0) {
      // Chart II with its level-0 normalization masked is still a valid
      // V_II-form of the projector.
      const BlockOperator v2 = build_V_partial(p, ChartTag::II).op;
      masked = std::max(masked, residual(v2 * p0 * v2.adjoint(), pr, 1));
    }
    const SpectralParts s = spectral_decompose(p);
    recon = std::max(recon, residual(s.plus + s.minus, build_h_jc(p), 2));
    comm = std::max(comm, (s.lambda * pr - pr * s.lambda).flat().cwiseAbs().maxCoeff());
  }
  o.require(idem <= 1e-12 && herm <= 1e-12, "idempotent/Hermitian");
  o.require(admissible <= 1e-12, "admissible chart form vs closed form");
  o.require(masked <= 1e-12, "masked chart-II form vs closed form");
  o.require(order <= 1e-12, "normalizer ordering");
  o.require(recon <= 1e-10, "spectral reconstruction");
  o.require(comm <= 1e-12, "[Lambda, P]");
  o.note("idem", idem);
  o.note("herm", herm);
  o.note("chart_form", admissible);
  o.note("masked_II_form", masked);
  o.note("spectral", recon);
  o.note("commutator", comm);
  return o;
}

// ------------------------------------------------------------------ 8

Outcome propagator() {
  Outcome o;
  const JCParams p = JCParams::from_physical(2.0, 2.5, 1.0, 40);
  const auto times = sweep::time_grid(10.0, 50);
  double closed = 0, uni = 0, full = 0;
  for (const auto& pt : sweep::evolve_series(p, times, 0, Exec::Parallel)) {
    closed = std::max(closed, pt.closed_vs_oracle);
    uni = std::max(uni, pt.unitarity);
    full = std::max(full, pt.full_vs_oracle.value_or(INFINITY));
  }
  const SplitHamiltonian s = build_full_hamiltonian(p);
  const double comm = (s.h1 * s.h2 - s.h2 * s.h1).flat().cwiseAbs().maxCoeff();
  o.require(std::abs(p.theta - 0.25) <= 1e-15 && times.size() == 50, "parameters");
  o.require(closed <= 1e-8, "closed form vs oracle");
  o.require(uni <= 1e-10, "unitarity");
  o.require(comm <= 1e-13, "[H1, H2]");
  o.require(full <= 1e-8, "product law vs oracle");
  o.note("closed", closed);
  o.note("unit", uni);
  o.note("commutator", comm);
  o.note("product_law", full);
  return o;
}

// ------------------------------------------------------------------ 9

Outcome grassmann() {
  Outcome o;
  double forms = 0, round = 0;
  for (double th : {0.25, 0.5, 1.0, 2.0}) {
    const JCParams p = params(th, 24);
    const LocalCoordinate c = local_coordinate(p);
    forms = std::max(forms, c.two_form_residual);
    round = std::max(round, residual(oike_projector(c), projector_jc(p).op, 1));
  }
  bool level0 = false;
  try {
    local_coordinate(params(-0.5, 24));
  } catch (const SingularSectorError& e) {
    level0 = e.entries().size() == 1 && e.entries()[0].level == 0;
  }
  const double classical = sweep::classical_coordinate_check(100, 9, 0.1, Exec::Parallel);
  o.require(forms <= 1e-13, "two forms of Z");
  o.require(round <= 1e-10, "round trip");
  o.require(level0, "theta=-0.5 level-0 singularity");
  o.require(classical <= 1e-12, "classical coordinate");
  o.note("forms", forms);
  o.note("roundtrip", round);
  o.note("classical", classical);
  return o;
}

// ----------------------------------------------------------------- 10

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args, const std::string& out) {
  const std::string cmd = std::string("\"") + HJC_CLI_PATH + "\" " + args + " --out \"" + out + "\"";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

bool has_keys(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) return false;
  for (const char* k : keys)
    if (!j.contains(k)) return false;
  return true;
}

std::string validate_json(const std::string& cmd, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    return std::string("invalid JSON: ") + e.what();
  }
  if (!has_keys(doc, {"schema", "command", "seed", "tolerances", "records", "pass"})) return "missing header keys";
  if (doc["schema"] != 1 || doc["command"] != cmd || doc["pass"] != true) return "bad header values";
  if (!doc["records"].is_array() || doc["records"].empty()) return "empty records";
  for (const auto& r : doc["records"]) {
    bool ok = true;
    if (cmd == "berry") {
      ok = has_keys(r, {"point", "class", "chart_residuals", "projector_residuals", "conditioning", "pass"});
    } else if (cmd == "jc") {
      ok = has_keys(r, {"theta", "decomposition_residual", "unitarity_residual", "eigenvalue_residual", "pass"});
    } else if (cmd == "strings") {
      ok = has_keys(r, {"theta", "singular", "lattice", "matches_ground_claim"});
      if (ok) {
        for (const auto& s : r["lattice"]) {
          ok = ok && has_keys(s, {"level_pair", "color"}) && s["level_pair"].size() == 2 &&
               (s["color"] == "black" || s["color"] == "white");
        }
      }
    } else if (cmd == "grassmann") {
      ok = has_keys(r, {"theta", "roundtrip_residual", "singular_levels", "pass"});
    }
    if (!ok) return "record missing fields";
  }
  if (cmd == "berry" && !doc.contains("algebra_checks")) return "missing algebra_checks";
  return {};
}

std::string validate_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# hjc evolve schema=1 seed=", 0) != 0) return "bad CSV header comment";
  if (!std::getline(in, line) ||
      line != "t,closed_vs_oracle_residual,inversion,unitarity_residual,full_vs_oracle_residual") {
    return "bad CSV column header";
  }
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string f;
    int n = 0;
    while (std::getline(fields, f, ',')) {
      char* end = nullptr;
      std::strtod(f.c_str(), &end);
      if (f.empty() || *end != '\0') return "non-numeric CSV field";
      ++n;
    }
    if (n != 5) return "wrong CSV column count";
    ++rows;
  }
  return rows == 50 ? std::string() : "expected 50 CSV rows";
}

Outcome cli_suite() {
  Outcome o;
  for (const std::string cmd : {"berry", "jc", "strings", "evolve", "grassmann"}) {
    const std::string a = "acceptance_" + cmd + "_1.out", b = "acceptance_" + cmd + "_2.out";
    const int e1 = run_cli(cmd + " --seed 4242", a);
    const int e2 = run_cli(cmd + " --seed 4242", b);
    o.require(e1 == 0 && e2 == 0, cmd + " exit code");
    const std::string ta = slurp(a), tb = slurp(b);
    o.require(!ta.empty() && ta == tb, cmd + " byte-identical");
    const std::string err = cmd == "evolve" ? validate_csv(ta) : validate_json(cmd, ta);
    o.require(err.empty(), cmd + " schema: " + err);
    std::remove(a.c_str());
    std::remove(b.c_str());
  }
  o.info = "commands=berry,jc,strings,evolve,grassmann";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "composition algebras", composition_algebras},
      {2, "classical charts", classical_charts},
      {3, "string divergence", string_divergence},
      {4, "Fock identities", fock_suite},
      {5, "quantum decomposition", quantum_decomposition},
      {6, "spectral law", spectral_law},
      {7, "projector and spectral decomposition", projector_spectral},
      {8, "propagator", propagator},
      {9, "Grassmann round trip", grassmann},
      {10, "CLI determinism and schema", cli_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %2d %s: %s | %s%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.info.c_str(),
                o.detail.empty() ? "" : " | ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
