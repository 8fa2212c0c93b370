#pragma once

// Scenario configuration: one JSON document per run.
//
//   {
//     "params":  {"m": 1, "A": 1, "omega": 1, "hbar": 1},
//     "packet":  {"k0": 0, "sigma_k": 1, "x0": 0},
//     "grid":    {"k_min": -24, "k_max": 24, "n": 1024},
//     "schemes": ["hamiltonian", "S1", "S2", "S3"],
//     "variants": ["derived"],
//     "t_end": 6.283185307179586, "samples": 64,
//     "dt": 0.001, "steps": 0, "strict": false
//   }
//
// Every key is optional; unknown keys are rejected.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "drivenq/core.hpp"

namespace drivenq {

enum class Scheme { hamiltonian, s1, s2, s3 };

const char* to_string(Scheme s);
/// Throws ConfigError naming the value if it is not one of hamiltonian, S1, S2, S3.
Scheme scheme_from_string(std::string_view name);

class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct GridSpec {
  double k_min = -24.0;
  double k_max = 24.0;
  std::size_t n = 1024;
  bool operator==(const GridSpec&) const = default;
};

struct ScenarioConfig {
  PhysicalParams params{};
  GaussianPacketSpec packet{};
  GridSpec grid{};
  std::vector<Scheme> schemes{Scheme::hamiltonian, Scheme::s1, Scheme::s2, Scheme::s3};
  bool derived = true;     // "derived" in variants
  bool published = false;  // "paper_printed" in variants: audit table
  double t_end = 2.0 * kPi;
  std::size_t samples = 64;
  double dt = 1e-3;       // split-step oracle step used by strict runs
  std::size_t steps = 0;  // characteristic RK4 steps; 0 = ceil(200 t max(w, 1))
  bool strict = false;

  bool has(Scheme s) const;
  bool operator==(const ScenarioConfig&) const = default;
};

ScenarioConfig parse_config(std::string_view document);
std::string serialize_config(const ScenarioConfig& config);
/// Throws ConfigError for out-of-range values.
void validate(const ScenarioConfig& config);

}  // namespace drivenq
