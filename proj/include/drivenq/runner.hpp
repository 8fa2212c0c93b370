#pragma once

// Batch execution of one scenario: report, strict checks and file output.
//
//   <out>/densities.csv   t,k,scheme,density
//   <out>/moments.csv     t,scheme,mean_x,mean_v,sigma_x,sigma_v,norm
//   <out>/summary.json    grid plan, distances, strict checks, audit table

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "drivenq/config.hpp"
#include "drivenq/report.hpp"

namespace drivenq {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitNumerical = 2,
  kExitStrictFailure = 3,
  kExitIo = 4,
};

struct RunOptions {
  std::filesystem::path out_dir;  // empty: $DRIVENQ_OUT_ROOT/drivenq_out, else ./drivenq_out
  bool audit = false;
  bool allow_grid_extension = true;
};

struct StrictCheck {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::filesystem::path resolve_out_dir(const RunOptions& options);

/// Checks applied by --strict; an empty list means nothing was applicable.
std::vector<StrictCheck> strict_checks(const ScenarioConfig& config, const SchemeReport& report);

/// Runs the scenario and writes the three output files. Diagnostics go to `log`.
int run_scenario(const ScenarioConfig& config, const RunOptions& options, std::ostream& log);

}  // namespace drivenq
