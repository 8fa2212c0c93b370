#include "drivenq/runner.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>

#include "drivenq/classical.hpp"
#include "drivenq/com_schemes.hpp"
#include "drivenq/hamiltonian.hpp"
#include "drivenq/reference.hpp"
#include "json.hpp"

namespace drivenq {
namespace {

using nlohmann::ordered_json;

constexpr double kNormTolerance = 1e-6;
constexpr double kRobertsonSlack = 1e-9;
constexpr double kRouteTolerance = 1e-8;
constexpr double kOracleTolerance = 1e-5;
constexpr double kFreeParticleTolerance = 1e-8;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void close_output(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw IoError("write failed for " + path.string());
}

AffineProblem affine_for(Scheme s, const ScenarioConfig& c) {
  const GaussianPacketSpec spec = c.packet;
  return scheme_problem_for(s, c.params, [spec](double k) { return gaussian_amplitude(spec, k); });
}

// Position window following the classical centre with 12 spreads of margin,
// spacing fine enough for the drifted momentum support.
PositionGrid oracle_position_grid(const ScenarioConfig& c) {
  const PhysicalParams& p = c.params;
  const double v0 = p.hbar * c.packet.k0 / p.m;
  const double sx0 = 1.0 / (2.0 * c.packet.sigma_k);
  double lo = c.packet.x0, hi = c.packet.x0;
  for (int j = 0; j <= 512; ++j) {
    const double t = c.t_end * j / 512.0;
    const double x = exact_trajectory(p, c.packet.x0, v0, t).x;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const double spread = p.hbar * c.t_end / (2.0 * p.m * sx0 * sx0);
  const double sx = sx0 * std::sqrt(1.0 + spread * spread);
  lo -= 12.0 * sx;
  hi += 12.0 * sx;
  const double kmax = std::abs(c.packet.k0) + std::abs(p.A / (p.hbar * p.omega)) + 10.0 * c.packet.sigma_k;
  const double dx = kPi / kmax;
  const auto n = std::bit_ceil(static_cast<std::size_t>(std::ceil((hi - lo) / dx)));
  return PositionGrid(lo, hi, std::max<std::size_t>(n, 64));
}

ordered_json moment_json(const MomentSet& m) {
  return {{"mean_x", m.mean_x}, {"mean_v", m.mean_v}, {"sigma_x", m.sigma_x}, {"sigma_v", m.sigma_v}, {"norm", m.norm}};
}

void write_densities(const std::filesystem::path& path, const SchemeReport& report) {
  std::ofstream out = open_output(path);
  out << "t,k,scheme,density\n";
  for (std::size_t j = 0; j < report.times.size(); ++j)
    for (const auto& s : report.schemes)
      for (std::size_t i = 0; i < report.output_k.size(); ++i)
        out << num(report.times[j]) << ',' << num(report.output_k[i]) << ',' << to_string(s.scheme) << ','
            << num(s.densities[j][i]) << '\n';
  close_output(out, path);
}

void write_moments(const std::filesystem::path& path, const SchemeReport& report) {
  std::ofstream out = open_output(path);
  out << "t,scheme,mean_x,mean_v,sigma_x,sigma_v,norm\n";
  for (std::size_t j = 0; j < report.times.size(); ++j)
    for (const auto& s : report.schemes) {
      const MomentSet& m = s.moments[j];
      out << num(report.times[j]) << ',' << to_string(s.scheme) << ',' << num(m.mean_x) << ',' << num(m.mean_v) << ','
          << num(m.sigma_x) << ',' << num(m.sigma_v) << ',' << num(m.norm) << '\n';
    }
  close_output(out, path);
}

void write_summary(const std::filesystem::path& path, const ScenarioConfig& config, const SchemeReport& report,
                   const std::vector<StrictCheck>& checks, int status) {
  ordered_json doc;
  doc["config"] = ordered_json::parse(serialize_config(config));
  doc["grid"] = {{"k_min", report.plan.grid.k_min()},
                 {"k_max", report.plan.grid.k_max()},
                 {"n", report.plan.grid.size()},
                 {"extended", report.plan.extended},
                 {"configured_sufficient", report.plan.sufficient},
                 {"required_k_min", report.plan.required_k_min},
                 {"required_k_max", report.plan.required_k_max},
                 {"required_spacing", report.plan.required_spacing},
                 {"output_points", report.output_k.size()},
                 {"warnings", report.plan.warnings}};
  doc["times"] = report.times;
  ordered_json distances = ordered_json::array();
  for (const auto& d : report.distances) {
    const double peak = d.values.empty() ? 0.0 : *std::max_element(d.values.begin(), d.values.end());
    distances.push_back({{"a", to_string(d.a)}, {"b", to_string(d.b)}, {"max", peak}, {"values", d.values}});
  }
  doc["distances"] = distances;
  ordered_json final_moments = ordered_json::object();
  for (const auto& s : report.schemes) final_moments[to_string(s.scheme)] = moment_json(s.moments.back());
  doc["final_moments"] = final_moments;
  ordered_json strict = ordered_json::array();
  for (const auto& c : checks)
    strict.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  doc["strict"] = {{"enabled", config.strict}, {"checks", strict}};
  ordered_json audit = ordered_json::array();
  for (const auto& r : report.audit)
    audit.push_back({{"name", r.name},
                     {"quantity", r.quantity},
                     {"t", r.t},
                     {"printed", r.printed},
                     {"derived", r.derived},
                     {"deviation", r.deviation}});
  doc["audit"] = audit;
  doc["status"] = status;
  std::ofstream out = open_output(path);
  out << doc.dump(2) << '\n';
  close_output(out, path);
}

}  // namespace

std::filesystem::path resolve_out_dir(const RunOptions& options) {
  if (!options.out_dir.empty()) return options.out_dir;
  if (const char* root = std::getenv("DRIVENQ_OUT_ROOT"); root != nullptr && *root != '\0')
    return std::filesystem::path(root) / "drivenq_out";
  return "drivenq_out";
}

std::vector<StrictCheck> strict_checks(const ScenarioConfig& config, const SchemeReport& report) {
  std::vector<StrictCheck> checks;
  const PhysicalParams& p = config.params;

  for (const auto& s : report.schemes) {
    double norm_dev = 0.0, robertson = std::numeric_limits<double>::infinity();
    for (const auto& m : s.moments) {
      norm_dev = std::max(norm_dev, std::abs(m.norm - 1.0));
      robertson = std::min(robertson, m.sigma_x * m.sigma_v / uncertainty_bound(p));
    }
    checks.push_back({std::string("norm_") + to_string(s.scheme), norm_dev, kNormTolerance, norm_dev <= kNormTolerance});
    checks.push_back({std::string("robertson_ratio_") + to_string(s.scheme), robertson, 1.0 - kRobertsonSlack,
                      robertson >= 1.0 - kRobertsonSlack});
  }

  const MomentumGrid grid(config.grid.k_min, config.grid.k_max, config.grid.n);
  const std::size_t steps = config.steps != 0 ? config.steps : default_steps(config.t_end, p.omega);
  for (const Scheme s : config.schemes) {
    const AffineProblem affine = affine_for(s, config);
    const SpectralState fast = evolve_affine_pde(affine, grid, config.t_end, steps);
    const SpectralState traced = evolve_linear_pde(affine.as_general(), grid, config.t_end, steps);
    const double dev = max_abs_difference(fast.values, traced.values);
    checks.push_back({std::string("route_agreement_") + to_string(s), dev, kRouteTolerance, dev <= kRouteTolerance});
  }

  if (config.has(Scheme::hamiltonian)) {
    const PositionGrid xgrid = oracle_position_grid(config);
    const PositionState psi = splitstep_evolve(sample_position_packet(config.packet, xgrid), p, config.t_end, config.dt);
    const double reach = std::abs(p.A / (p.hbar * p.omega)) + 10.0 * config.packet.sigma_k;
    const MomentumGrid kgrid(config.packet.k0 - reach, config.packet.k0 + reach, 1024);
    const SpectralState oracle = position_to_momentum(psi, kgrid);
    const GaussianPacketSpec spec = config.packet;
    const SpectralState ham = evolve_hamiltonian([spec](double k) { return gaussian_amplitude(spec, k); }, kgrid, p,
                                                 config.t_end, HamiltonianVariant::exact_characteristics, config.steps);
    const double d = density_distance(oracle, ham);
    checks.push_back({"splitstep_vs_hamiltonian_l1", d, kOracleTolerance, d <= kOracleTolerance});
  }

  if (p.A == 0.0) {
    for (const auto& d : report.distances) {
      if (d.a == Scheme::s3 || d.b == Scheme::s3) continue;
      const double peak = *std::max_element(d.values.begin(), d.values.end());
      checks.push_back({std::string("free_particle_distance_") + to_string(d.a) + "_" + to_string(d.b), peak,
                        kFreeParticleTolerance, peak <= kFreeParticleTolerance});
    }
  }
  return checks;
}

int run_scenario(const ScenarioConfig& config, const RunOptions& options, std::ostream& log) {
  try {
    validate(config);
  } catch (const InvalidArgument& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  const std::filesystem::path dir = resolve_out_dir(options);
  std::optional<SchemeReport> built;
  std::vector<StrictCheck> checks;
  try {
    ReportOptions ro;
    ro.allow_grid_extension = options.allow_grid_extension;
    ro.audit = options.audit;
    built.emplace(build_scheme_report(config, ro));
    for (const auto& w : built->plan.warnings) log << "warning: " << w << '\n';
    if (config.strict) checks = strict_checks(config, *built);
  } catch (const NumericalError& e) {
    log << "numerical abort: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const InvalidArgument& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  const SchemeReport& report = *built;
  int status = kExitOk;
  for (const auto& c : checks) {
    if (c.pass) continue;
    log << "strict check failed: " << c.name << " = " << num(c.value) << " (tolerance " << num(c.tolerance) << ")\n";
    status = kExitStrictFailure;
  }

  try {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    write_densities(dir / "densities.csv", report);
    write_moments(dir / "moments.csv", report);
    write_summary(dir / "summary.json", config, report, checks, status);
  } catch (const IoError& e) {
    log << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  return status;
}

}  // namespace drivenq
