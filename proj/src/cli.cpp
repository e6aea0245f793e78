#include "hjc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hjc/errors.hpp"
#include "hjc/json_io.hpp"

namespace hjc::cli {

namespace {

using sweep::Exec;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return out;
}

json tolerances_json(const Tolerances& t) {
  return {{"algebraic", t.algebraic},         {"decomposition", t.decomposition},
          {"propagator", t.propagator},       {"string_eps", t.string_eps},
          {"sector_eps", t.sector_eps},       {"ill_conditioned", t.ill_conditioned},
          {"pinv_eps", t.pinv_eps}};
}

json header(const RunConfig& cfg) {
  return {{"schema", kSchemaVersion},
          {"command", cfg.command},
          {"seed", cfg.seed},
          {"tolerances", tolerances_json(cfg.tol)}};
}

std::string csv_header(const RunConfig& cfg) {
  return "# hjc " + cfg.command + " schema=" + std::to_string(kSchemaVersion) +
         " seed=" + std::to_string(cfg.seed) + "\n";
}

void validate_common(const RunConfig& cfg) {
  const Tolerances& t = cfg.tol;
  for (double v : {t.algebraic, t.decomposition, t.propagator, t.string_eps, t.sector_eps}) {
    if (!(v > 0.0) || !std::isfinite(v)) throw UsageError("tolerances must be positive and finite");
  }
  if (cfg.dim && *cfg.dim < 4) throw UsageError("--dim must be at least 4");
  if (cfg.samples < 0) throw UsageError("--samples must be non-negative");
  if (cfg.theta && !std::isfinite(*cfg.theta)) throw UsageError("--theta must be finite");
}

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

// ------------------------------------------------------------- berry

json chart_json(const std::optional<sweep::ChartCheck>& c, bool raised) {
  if (!c) return {{"raised", raised}};
  return {{"raised", raised},
          {"reconstruction", c->reconstruction},
          {"unitarity", c->unitarity},
          {"eigenvector", c->eigenvector},
          {"projector", c->projector}};
}

json berry_record_json(AlgebraTag tag, const sweep::BerryRecord& r) {
  return {{"index", r.index},
          {"algebra", to_string(tag)},
          {"source", r.source},
          {"point", {{"w", to_json(r.w)}, {"w_norm", r.w_norm}, {"z", r.z}}},
          {"class", to_string(r.point_class)},
          {"chart_residuals", {{"I", chart_json(r.chart_I, r.chart_I_raised)},
                               {"II", chart_json(r.chart_II, r.chart_II_raised)},
                               {"cocycle", opt(r.cocycle)}}},
          {"projector_residuals", {{"raised", r.projector_raised},
                                   {"idempotency", opt(r.projector_idempotency)},
                                   {"hermiticity", opt(r.projector_hermiticity)},
                                   {"max_entry", opt(r.projector_max_entry)}}},
          {"conditioning", {{"I", r.conditioning_I}, {"II", r.conditioning_II}}},
          {"error", r.error},
          {"pass", r.pass}};
}

bool algebra_check_passes(const sweep::AlgebraCheck& c, const Tolerances& tol) {
  bool ok = c.norm_multiplicativity <= tol.algebraic && c.conjugation <= 0.1 * tol.algebraic &&
            c.alternativity <= tol.algebraic && c.inverse <= tol.algebraic &&
            c.single_generator <= tol.algebraic;
  if (c.tag != AlgebraTag::O) ok = ok && c.associativity <= tol.algebraic;
  return ok;
}

RunResult cmd_berry(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid.value_or(GridSpec{});
  if (grid.z_steps < 1 || grid.w_steps < 1) throw UsageError("empty grid");
  std::vector<AlgebraTag> tags;
  if (cfg.algebra) {
    tags.push_back(*cfg.algebra);
  } else {
    tags.assign(kAllAlgebras.begin(), kAllAlgebras.end());
  }
  const Format f = format_or(cfg, Format::Json);

  bool all_pass = true;
  json doc = header(cfg);
  doc["grid"] = {{"z", {grid.z_min, grid.z_max, grid.z_steps}},
                 {"w", {grid.w_min, grid.w_max, grid.w_steps}}};
  doc["samples"] = cfg.samples;
  json checks = json::array();
  json records = json::array();
  std::string csv = csv_header(cfg) +
                    "algebra,index,source,w_norm,z,class,chart_I_raised,chart_I_reconstruction,"
                    "chart_I_unitarity,chart_II_raised,chart_II_reconstruction,chart_II_unitarity,"
                    "cocycle,projector_idempotency,projector_hermiticity,conditioning_I,"
                    "conditioning_II,pass\n";

  for (AlgebraTag tag : tags) {
    std::vector<sweep::LabeledPoint> pts;
    try {
      pts = sweep::berry_grid(tag, grid.z_min, grid.z_max, grid.z_steps, grid.w_min, grid.w_max,
                              grid.w_steps);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
    auto rnd = sweep::berry_random(tag, cfg.samples, cfg.seed);
    pts.insert(pts.end(), std::make_move_iterator(rnd.begin()), std::make_move_iterator(rnd.end()));
    const auto recs = sweep::berry_sweep(pts, cfg.tol, cfg.exec);

    const auto samples = sweep::draw_algebra_samples(tag, cfg.samples, cfg.seed);
    const auto check = sweep::algebra_check(tag, samples, cfg.exec);
    const bool check_ok = algebra_check_passes(check, cfg.tol);
    all_pass = all_pass && check_ok;
    json cj = {{"algebra", to_string(tag)},
               {"samples", check.samples},
               {"norm_multiplicativity", check.norm_multiplicativity},
               {"conjugation", check.conjugation},
               {"associativity", check.associativity},
               {"alternativity", check.alternativity},
               {"inverse", check.inverse},
               {"single_generator", check.single_generator},
               {"pass", check_ok}};
    if (const auto triple = find_nonassociative_triple(tag)) {
      cj["nonassociative_triple"] = {{"basis", {triple->i, triple->j, triple->k}},
                                     {"associator_norm", triple->associator_norm}};
    } else {
      cj["nonassociative_triple"] = nullptr;
    }
    checks.push_back(std::move(cj));

    for (const auto& r : recs) {
      all_pass = all_pass && r.pass;
      if (f == Format::Json) {
        records.push_back(berry_record_json(tag, r));
        continue;
      }
      auto part = [](const std::optional<sweep::ChartCheck>& c, bool raised) {
        return std::string(raised ? "1" : "0") + "," + (c ? fmt(c->reconstruction) : "") + "," +
               (c ? fmt(c->unitarity) : "");
      };
      csv += std::string(to_string(tag)) + "," + std::to_string(r.index) + "," + r.source + "," +
             fmt(r.w_norm) + "," + fmt(r.z) + "," + std::string(to_string(r.point_class)) + "," +
             part(r.chart_I, r.chart_I_raised) + "," + part(r.chart_II, r.chart_II_raised) + "," +
             fmt(r.cocycle) + "," + fmt(r.projector_idempotency) + "," +
             fmt(r.projector_hermiticity) + "," + fmt(r.conditioning_I) + "," +
             fmt(r.conditioning_II) + "," + (r.pass ? "1" : "0") + "\n";
    }
  }

  RunResult res;
  res.exit_code = all_pass ? kExitPass : kExitFail;
  if (f == Format::Json) {
    doc["algebra_checks"] = std::move(checks);
    doc["records"] = std::move(records);
    doc["pass"] = all_pass;
    res.output = doc.dump(2) + "\n";
  } else {
    res.output = std::move(csv);
  }
  return res;
}

// ---------------------------------------------------------------- jc

std::vector<double> theta_list(const RunConfig& cfg, std::vector<double> fallback) {
  if (cfg.theta) return {*cfg.theta};
  return fallback;
}

RunResult cmd_jc(const RunConfig& cfg) {
  const auto thetas = theta_list(cfg, {-1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0});
  const int dim = cfg.dim.value_or(32);
  const auto recs = sweep::jc_sweep(thetas, dim, cfg.tol, cfg.exec);
  const Format f = format_or(cfg, Format::Json);
  bool all_pass = true;
  for (const auto& r : recs) all_pass = all_pass && r.pass;

  RunResult res;
  res.exit_code = all_pass ? kExitPass : kExitFail;
  if (f == Format::Csv) {
    std::string csv = csv_header(cfg) +
                      "theta,dim,admissible,decomposition,unitarity,ordering,eigenvalues,"
                      "projector_idempotency,projector_hermiticity,projector_vs_chart,spectral,"
                      "spectral_commutator,two_step_off_ground,two_step_ground_defect,pass\n";
    for (const auto& r : recs) {
      std::string adm;
      for (ChartTag c : r.admissible) adm += (adm.empty() ? "" : "+") + std::string(to_string(c));
      csv += fmt(r.theta) + "," + std::to_string(r.dim) + "," + adm + "," + fmt(r.decomposition) +
             "," + fmt(r.unitarity) + "," + fmt(r.ordering) + "," + fmt(r.eigenvalues) + "," +
             fmt(r.projector_idempotency) + "," + fmt(r.projector_hermiticity) + "," +
             fmt(r.projector_vs_chart) + "," + fmt(r.spectral) + "," +
             fmt(r.spectral_commutator) + "," + fmt(r.two_step_off_ground) + "," +
             fmt(r.two_step_ground_defect) + "," + (r.pass ? "1" : "0") + "\n";
    }
    res.output = std::move(csv);
    return res;
  }

  json doc = header(cfg);
  doc["dim"] = dim;
  json records = json::array();
  for (const auto& r : recs) {
    json adm = json::array();
    for (ChartTag c : r.admissible) adm.push_back(to_string(c));
    json inadm = json::array();
    for (const auto& e : r.inadmissible) inadm.push_back(to_json(e));
    records.push_back({{"theta", r.theta},
                       {"dim", r.dim},
                       {"admissible", adm},
                       {"inadmissible", inadm},
                       {"decomposition_residual", r.decomposition},
                       {"unitarity_residual", r.unitarity},
                       {"normalizer_ordering_residual", r.ordering},
                       {"eigenvalue_residual", r.eigenvalues},
                       {"projector", {{"idempotency", r.projector_idempotency},
                                      {"hermiticity", r.projector_hermiticity},
                                      {"ordering", r.projector_ordering},
                                      {"vs_chart", r.projector_vs_chart},
                                      {"ground_pseudo_inverse", r.ground_pseudo_inverse}}},
                       {"spectral_residual", r.spectral},
                       {"spectral_commutator", r.spectral_commutator},
                       {"two_step", {{"off_ground", r.two_step_off_ground},
                                     {"ground_defect", r.two_step_ground_defect}}},
                       {"error", r.error},
                       {"pass", r.pass}});
  }
  doc["records"] = std::move(records);
  doc["pass"] = all_pass;
  res.output = doc.dump(2) + "\n";
  return res;
}

// ------------------------------------------------------------ strings

RunResult cmd_strings(const RunConfig& cfg) {
  if (format_or(cfg, Format::Json) != Format::Json) throw UsageError("strings supports --format json only");
  if (cfg.levels < 1) throw UsageError("--levels must be positive");
  const auto thetas = theta_list(cfg, linspace(-1.0, 1.0, 9));
  const int dim = cfg.dim.value_or(8);
  if (cfg.levels > dim) throw UsageError("--levels must not exceed --dim");
  const auto recs = sweep::strings_sweep(thetas, dim, cfg.tol, cfg.exec);

  bool all_pass = true;
  json doc = header(cfg);
  doc["dim"] = dim;
  doc["levels"] = cfg.levels;
  json records = json::array();
  for (const auto& r : recs) {
    all_pass = all_pass && r.matches_ground_claim;
    json j = to_json(r.report, cfg.levels);
    j["matches_ground_claim"] = r.matches_ground_claim;
    records.push_back(std::move(j));
  }
  doc["records"] = std::move(records);
  doc["pass"] = all_pass;
  return {all_pass ? kExitPass : kExitFail, doc.dump(2) + "\n", {}};
}

// ------------------------------------------------------------- evolve

JCParams evolve_params(const RunConfig& cfg) {
  JCParams p;
  p.g = cfg.g;
  p.dim = cfg.dim.value_or(40);
  if (cfg.omega && cfg.delta && !cfg.theta) {
    if (cfg.g == 0.0) throw UsageError("--g must be nonzero");
    p.theta = (*cfg.delta - *cfg.omega) / (2.0 * cfg.g);
    p.omega = cfg.omega;
    p.delta = cfg.delta;
  } else {
    p.theta = cfg.theta.value_or(0.25);
    p.omega = cfg.omega.value_or(2.0);
    p.delta = cfg.delta.value_or(*p.omega + 2.0 * p.g * p.theta);
  }
  try {
    p.validate();
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
  return p;
}

RunResult cmd_evolve(const RunConfig& cfg) {
  const JCParams p = evolve_params(cfg);
  if (cfg.n0 < 0 || cfg.n0 > p.dim - 3) throw UsageError("--n0 must lie in [0, dim-3]");
  std::vector<double> times;
  try {
    times = sweep::time_grid(cfg.t_max, cfg.t_steps);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  const auto pts = sweep::evolve_series(p, times, cfg.n0, cfg.exec);
  const SplitHamiltonian split = build_full_hamiltonian(p);
  const double commutator = (split.h1 * split.h2 - split.h2 * split.h1).flat().cwiseAbs().maxCoeff();

  bool all_pass = commutator <= 0.1 * cfg.tol.algebraic;
  for (const auto& pt : pts) {
    all_pass = all_pass && pt.closed_vs_oracle <= cfg.tol.propagator &&
               pt.unitarity <= cfg.tol.decomposition &&
               (!pt.full_vs_oracle || *pt.full_vs_oracle <= cfg.tol.propagator);
  }

  RunResult res;
  res.exit_code = all_pass ? kExitPass : kExitFail;
  if (format_or(cfg, Format::Csv) == Format::Csv) {
    std::string csv = "# hjc evolve schema=" + std::to_string(kSchemaVersion) +
                      " seed=" + std::to_string(cfg.seed) + " theta=" + fmt(p.theta) +
                      " g=" + fmt(p.g) + " omega=" + fmt(*p.omega) + " delta=" + fmt(*p.delta) +
                      " dim=" + std::to_string(p.dim) + " n0=" + std::to_string(cfg.n0) +
                      " split_commutator=" + fmt(commutator) + "\n";
    csv += "t,closed_vs_oracle_residual,inversion,unitarity_residual,full_vs_oracle_residual\n";
    for (const auto& pt : pts) {
      csv += fmt(pt.t) + "," + fmt(pt.closed_vs_oracle) + "," + fmt(pt.inversion) + "," +
             fmt(pt.unitarity) + "," + fmt(pt.full_vs_oracle) + "\n";
    }
    res.output = std::move(csv);
    return res;
  }
  json doc = header(cfg);
  doc["parameters"] = {{"theta", p.theta}, {"g", p.g},     {"omega", *p.omega},
                       {"delta", *p.delta}, {"dim", p.dim}, {"n0", cfg.n0}};
  doc["split_commutator"] = commutator;
  json series = json::array();
  for (const auto& pt : pts) {
    series.push_back({{"t", pt.t},
                      {"closed_vs_oracle_residual", pt.closed_vs_oracle},
                      {"inversion", pt.inversion},
                      {"unitarity_residual", pt.unitarity},
                      {"full_vs_oracle_residual", opt(pt.full_vs_oracle)}});
  }
  doc["records"] = std::move(series);
  doc["pass"] = all_pass;
  res.output = doc.dump(2) + "\n";
  return res;
}

// ---------------------------------------------------------- grassmann

RunResult cmd_grassmann(const RunConfig& cfg) {
  const auto thetas = theta_list(cfg, {0.25, 0.5, 1.0, 2.0, -0.5});
  const int dim = cfg.dim.value_or(24);
  const auto recs = sweep::grassmann_sweep(thetas, dim, cfg.tol, cfg.exec);
  const double classical = sweep::classical_coordinate_check(cfg.samples, cfg.seed, 0.1, cfg.exec);
  bool all_pass = classical <= cfg.tol.algebraic;
  for (const auto& r : recs) all_pass = all_pass && r.pass;

  RunResult res;
  res.exit_code = all_pass ? kExitPass : kExitFail;
  if (format_or(cfg, Format::Json) == Format::Csv) {
    std::string csv = csv_header(cfg) + "theta,dim,roundtrip_residual,two_form_residual,"
                                        "inversion_identity_residual,upper_block_residual,"
                                        "singular_levels,pass\n";
    for (const auto& r : recs) {
      std::string lv;
      for (int l : r.singular_levels) lv += (lv.empty() ? "" : " ") + std::to_string(l);
      csv += fmt(r.theta) + "," + std::to_string(r.dim) + "," + fmt(r.roundtrip) + "," +
             fmt(r.two_form) + "," + fmt(r.inversion_identity) + "," + fmt(r.upper_block) + "," +
             lv + "," + (r.pass ? "1" : "0") + "\n";
    }
    res.output = std::move(csv);
    return res;
  }
  json doc = header(cfg);
  doc["dim"] = dim;
  json records = json::array();
  for (const auto& r : recs) {
    records.push_back({{"theta", r.theta},
                       {"dim", r.dim},
                       {"roundtrip_residual", opt(r.roundtrip)},
                       {"two_form_residual", opt(r.two_form)},
                       {"inversion_identity_residual", opt(r.inversion_identity)},
                       {"upper_block_residual", opt(r.upper_block)},
                       {"singular_levels", r.singular_levels},
                       {"error", r.error},
                       {"pass", r.pass}});
  }
  doc["records"] = std::move(records);
  doc["classical"] = {{"samples", cfg.samples}, {"min_r_plus_z", 0.1}, {"residual", classical}};
  doc["pass"] = all_pass;
  res.output = doc.dump(2) + "\n";
  return res;
}

double parse_number(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad number in " + what + ": '" + s + "'");
  }
  if (pos != s.size() || !std::isfinite(v)) throw UsageError("bad number in " + what + ": '" + s + "'");
  return v;
}

int parse_count(const std::string& s, const std::string& what) {
  const double v = parse_number(s, what);
  if (v != std::floor(v) || v < 0 || v > 1e6) throw UsageError("bad step count in " + what + ": '" + s + "'");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  const auto ranges = split(text, ',');
  if (ranges.empty() || ranges.size() > 2) throw UsageError("--grid expects zmin:zmax:nz[,wmin:wmax:nw]");
  GridSpec g;
  auto parse_range = [](const std::string& r, double& lo, double& hi, int& n) {
    const auto f = split(r, ':');
    if (f.size() != 3) throw UsageError("--grid range must be lo:hi:steps, got '" + r + "'");
    lo = parse_number(f[0], "--grid");
    hi = parse_number(f[1], "--grid");
    n = parse_count(f[2], "--grid");
    if (lo > hi) throw UsageError("--grid range has lo > hi: '" + r + "'");
  };
  parse_range(ranges[0], g.z_min, g.z_max, g.z_steps);
  if (ranges.size() == 2) {
    parse_range(ranges[1], g.w_min, g.w_max, g.w_steps);
    if (g.w_min < 0.0) throw UsageError("--grid w range must be non-negative");
  }
  if (g.z_steps == 0 || g.w_steps == 0) throw UsageError("empty grid");
  return g;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"berry", "jc", "strings", "evolve", "grassmann"};
  return names;
}

RunResult run(const RunConfig& cfg) {
  try {
    validate_common(cfg);
    if (cfg.command == "berry") return cmd_berry(cfg);
    if (cfg.command == "jc") return cmd_jc(cfg);
    if (cfg.command == "strings") return cmd_strings(cfg);
    if (cfg.command == "evolve") return cmd_evolve(cfg);
    if (cfg.command == "grassmann") return cmd_grassmann(cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& ex) {
    return {kExitUsage, {}, ex.what()};
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Verification suites for division-algebra Berry models and the Jaynes-Cummings model"};
  RunConfig cfg;
  std::string command, algebra, grid, format;
  std::optional<double> theta, omega, delta;
  std::optional<int> dim;
  std::optional<std::uint64_t> seed;
  bool serial = false;

  app.add_option("command,--command", command, "berry | jc | strings | evolve | grassmann")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--algebra", algebra, "R | C | H | O (berry; default: all four)")
      ->check(CLI::IsMember({"R", "C", "H", "O"}));
  app.add_option("--theta", theta, "detuning ratio (overrides the default sweep)");
  app.add_option("--g", cfg.g, "coupling constant");
  app.add_option("--omega", omega, "field frequency (evolve)");
  app.add_option("--delta", delta, "atomic splitting (evolve)");
  app.add_option("--dim", dim, "Fock truncation d");
  app.add_option("--t-max", cfg.t_max, "final time (evolve)");
  app.add_option("--t-steps", cfg.t_steps, "number of time points (evolve)");
  app.add_option("--grid", grid, "zmin:zmax:nz[,wmin:wmax:nw] (berry)");
  app.add_option("--samples", cfg.samples, "random samples per suite");
  app.add_option("--seed", seed, "random seed (fallback: HJC_SEED)");
  app.add_option("--n0", cfg.n0, "initial photon number for |e, n0> (evolve)");
  app.add_option("--levels", cfg.levels, "lattice levels per axis (strings)");
  app.add_option("--tol-algebraic", cfg.tol.algebraic, "algebraic identity tolerance");
  app.add_option("--tol-decomposition", cfg.tol.decomposition, "decomposition tolerance");
  app.add_option("--tol-propagator", cfg.tol.propagator, "propagator tolerance");
  app.add_option("--tol-string", cfg.tol.string_eps, "Dirac string threshold on |w|");
  app.add_option("--tol-sector", cfg.tol.sector_eps, "singular sector threshold");
  app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "output path (default: stdout)");
  app.add_flag("--serial", serial, "use the serial reference kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.command = command;
    if (!algebra.empty()) cfg.algebra = parse_algebra_tag(algebra);
    if (!grid.empty()) cfg.grid = parse_grid(grid);
    if (!format.empty()) cfg.format = format == "csv" ? Format::Csv : Format::Json;
    cfg.theta = theta;
    cfg.omega = omega;
    cfg.delta = delta;
    cfg.dim = dim;
    cfg.exec = serial ? Exec::Serial : Exec::Parallel;
    if (seed) {
      cfg.seed = *seed;
    } else if (const char* env = std::getenv("HJC_SEED"); env && *env) {
      const std::string s(env);
      if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
        throw UsageError("HJC_SEED must be a non-negative integer");
      }
      cfg.seed = std::stoull(s);
    }
  } catch (const std::exception& ex) {
    std::cerr << "hjc: " << ex.what() << "\n";
    return kExitUsage;
  }

  const RunResult res = run(cfg);
  if (res.exit_code == kExitUsage) {
    std::cerr << "hjc: " << res.message << "\n";
    return kExitUsage;
  }
  if (cfg.out.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    out << res.output;
    if (!out) {
      std::cerr << "hjc: cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
  }
  if (res.exit_code == kExitFail) std::cerr << "hjc: numerical checks failed\n";
  return res.exit_code;
}

}  // namespace hjc::cli
