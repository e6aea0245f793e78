#pragma once

// Command layer behind the `hjc` executable. Each command runs a
// verification suite and renders a deterministic report.
//
// Exit codes: 0 every check passed, 1 a numerical check failed (the report
// is still produced), 2 usage or configuration error.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjc/config.hpp"
#include "hjc/division_algebra.hpp"
#include "hjc/sweep.hpp"

namespace hjc::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };

// "zmin:zmax:nz[,wmin:wmax:nw]"; the w part defaults to 0:1:3.
struct GridSpec {
  double z_min = -2.0, z_max = 2.0;
  int z_steps = 9;
  double w_min = 0.0, w_max = 1.0;
  int w_steps = 3;
};

GridSpec parse_grid(const std::string& text);

struct RunConfig {
  std::string command;  // berry | jc | strings | evolve | grassmann
  std::optional<AlgebraTag> algebra;
  std::optional<double> theta;
  double g = 1.0;
  std::optional<double> omega;
  std::optional<double> delta;
  std::optional<int> dim;
  double t_max = 10.0;
  int t_steps = 50;
  std::optional<GridSpec> grid;
  int samples = 100;
  std::uint64_t seed = kDefaultSeed;
  Tolerances tol{};
  std::optional<Format> format;  // command default when unset
  std::string out;               // empty means stdout
  int n0 = 0;
  int levels = 4;
  sweep::Exec exec = sweep::Exec::Parallel;
};

struct RunResult {
  int exit_code = kExitPass;
  std::string output;   // rendered report, empty on usage error
  std::string message;  // diagnostic for usage errors
};

const std::vector<std::string>& commands();

// Runs one command. Never throws; configuration problems map to kExitUsage.
RunResult run(const RunConfig& cfg);

// Parses argv, runs, writes the report to --out or stdout.
int main_entry(int argc, char** argv);

}  // namespace hjc::cli
