#include "drivenq/report.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "drivenq/classical.hpp"
#include "drivenq/com_schemes.hpp"
#include "drivenq/hamiltonian.hpp"

namespace drivenq {
namespace {

std::size_t steps_for(const ScenarioConfig& c, double t) {
  return c.steps != 0 ? c.steps : default_steps(t, c.params.omega);
}

RVector sample_times(const ScenarioConfig& c) {
  RVector times(c.samples);
  for (std::size_t j = 0; j < c.samples; ++j)
    times[j] = c.t_end * static_cast<double>(j) / static_cast<double>(c.samples - 1);
  return times;
}

Profile packet_profile(const GaussianPacketSpec& spec) {
  return [spec](double k) { return gaussian_amplitude(spec, k); };
}

MomentumGrid configured_grid(const ScenarioConfig& c) { return MomentumGrid(c.grid.k_min, c.grid.k_max, c.grid.n); }

// Largest |arg(a/b)| after global alignment, over points above 1e-6 of the peak density.
double residual_phase(const CVector& reference, const CVector& candidate) {
  const CVector aligned = align_global_phase(reference, candidate);
  double peak = 0.0;
  for (const auto& v : reference) peak = std::max(peak, std::norm(v));
  double worst = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (std::norm(reference[i]) < 1e-6 * peak) continue;
    worst = std::max(worst, std::abs(std::arg(reference[i] * std::conj(aligned[i]))));
  }
  return worst;
}

}  // namespace

const SchemeSeries& SchemeReport::series(Scheme s) const {
  for (const auto& entry : schemes)
    if (entry.scheme == s) return entry;
  throw InvalidArgument(std::string("scheme not in report: ") + to_string(s));
}

const DistanceSeries& SchemeReport::distance(Scheme a, Scheme b) const {
  for (const auto& d : distances)
    if ((d.a == a && d.b == b) || (d.a == b && d.b == a)) return d;
  throw InvalidArgument(std::string("no distance series for ") + to_string(a) + "/" + to_string(b));
}

AffineProblem scheme_problem_for(Scheme scheme, const PhysicalParams& params, Profile initial) {
  switch (scheme) {
    case Scheme::hamiltonian:
      return hamiltonian_affine_problem(params, std::move(initial));
    case Scheme::s1:
      return scheme_affine_problem(SchemeId::S1, params, std::move(initial));
    case Scheme::s2:
      return scheme_affine_problem(SchemeId::S2, params, std::move(initial));
    case Scheme::s3:
      return scheme_affine_problem(SchemeId::S3, params, std::move(initial));
  }
  throw InvalidArgument("unknown scheme");
}

GridPlan plan_grid(const ScenarioConfig& config, const ReportOptions& options) {
  const MomentumGrid configured = configured_grid(config);
  const double k0 = config.packet.k0;
  const double sigma = config.packet.sigma_k;
  const double reach = 8.0 * sigma;

  double lo = k0 - reach, hi = k0 + reach, extent = 0.0;
  std::string limiting;
  for (const Scheme s : config.schemes) {
    const AffineProblem problem = scheme_problem_for(s, config.params, packet_profile(config.packet));
    for (const double t : sample_times(config)) {
      const AffineCharacteristicMap map = trace_affine(problem, t, steps_for(config, t));
      const double a = (k0 - reach - map.shift) / map.scale;
      const double b = (k0 + reach - map.shift) / map.scale;
      if (a < lo || b > hi) limiting = to_string(s);
      lo = std::min(lo, a);
      hi = std::max(hi, b);
      auto slope = [&](double k) { return -config.packet.x0 * map.scale + 2.0 * map.e2.imag() * k + map.e1.imag(); };
      const double x_reach = std::max(std::abs(slope(a)), std::abs(slope(b))) + 4.0 * map.scale / sigma;
      extent = std::max(extent, x_reach);
    }
  }

  GridPlan plan{.grid = configured};
  plan.required_k_min = lo;
  plan.required_k_max = hi;
  plan.required_spacing = extent > 0.0 ? kPi / extent : std::numeric_limits<double>::infinity();
  const bool support_ok = configured.k_min() <= lo && configured.k_max() >= hi;
  const bool resolution_ok = configured.spacing() <= plan.required_spacing;
  plan.sufficient = support_ok && resolution_ok;
  if (plan.sufficient) return plan;

  std::ostringstream why;
  if (!support_ok) {
    why << "grid [" << configured.k_min() << ", " << configured.k_max() << "] does not cover the required support ["
        << lo << ", " << hi << "] (widest: " << limiting << ")";
    if (config.has(Scheme::s3))
      why << "; S3 stretches the packet by e^{w t_end / 2} = " << std::exp(0.5 * std::abs(config.params.omega) * config.t_end);
  }
  if (!resolution_ok) {
    if (!support_ok) why << "; ";
    why << "grid spacing " << configured.spacing() << " exceeds the phase-resolution limit " << plan.required_spacing;
  }
  plan.warnings.push_back(why.str());
  if (!options.allow_grid_extension) throw NumericalError("insufficient momentum grid: " + why.str());

  const double k_min = std::min(configured.k_min(), lo);
  const double k_max = std::max(configured.k_max(), hi);
  const double spacing = std::min(configured.spacing(), plan.required_spacing);
  const double intervals = std::ceil((k_max - k_min) / spacing);
  if (!(intervals + 1.0 <= static_cast<double>(options.max_grid_points)))
    throw NumericalError("required momentum grid exceeds " + std::to_string(options.max_grid_points) + " points: " +
                         why.str());
  const std::size_t n = std::bit_ceil(static_cast<std::size_t>(intervals) + 1);
  plan.grid = MomentumGrid(k_min, k_max, std::min(n, options.max_grid_points));
  plan.extended = true;
  std::ostringstream ext;
  ext << "grid extended to [" << k_min << ", " << k_max << "] with n=" << plan.grid.size();
  plan.warnings.push_back(ext.str());
  return plan;
}

std::vector<AuditRow> build_audit(const ScenarioConfig& config, const MomentumGrid& grid) {
  const PhysicalParams& p = config.params;
  const double m = p.m, A = p.A, w = p.omega;
  const double ta = 0.5 * config.t_end;
  const Profile F = packet_profile(config.packet);
  std::vector<AuditRow> rows;

  {
    const auto audit = audit_closed_form_phase(F, configured_grid(config), p, ta);
    rows.push_back({"hamiltonian_closed_form_density", "max |density(printed) - density(characteristics)|", ta, 0.0, 0.0,
                    audit.max_density_deviation});
    rows.push_back({"hamiltonian_closed_form_phase", "phase residual after best global phase (rad); nonzero means k-dependent", ta,
                    audit.residual_phase, 0.0, audit.residual_phase});
  }

  const double printed_amp = A / (2.0 * m * w * w);
  const double derived_amp = A * A / (2.0 * m * w * w);
  rows.push_back({"k1_sin2_amplitude", "coefficient of sin^2(wt) in K1, s1 and B", 0.0, printed_amp, derived_amp,
                  std::abs(printed_amp - derived_amp)});
  rows.push_back({"s2_cos_mass_factor", "coefficient of (1 - cos wt) in B", 0.0, A * A / (w * w), A * A / (m * w * w),
                  std::abs(A * A / (w * w) - A * A / (m * w * w))});
  rows.push_back({"k3_v_cos_coefficient", "coefficient of v (cos wt - 1) in K3", 0.0, A / (m * w), A / (2.0 * w),
                  std::abs(A / (m * w) - A / (2.0 * w))});

  {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double k = grid[i];
      if (std::abs(k - config.packet.k0) > 6.0 * config.packet.sigma_k) continue;
      worst = std::max(worst, std::abs(printed_phi1(p, k, ta) - quadrature_phi1(p, k, ta)));
    }
    rows.push_back({"s1_phase_closed_form", "S1 phase: printed closed form vs quadrature of the symbol (at k0; deviation is max over the packet)",
                    ta, printed_phi1(p, config.packet.k0, ta), quadrature_phi1(p, config.packet.k0, ta), worst});
  }
  {
    const auto printed = scheme3_char_map(p, ta, FormulaVariant::published);
    const auto derived = scheme3_char_map(p, ta, FormulaVariant::derived, steps_for(config, ta));
    rows.push_back({"s3_foot_shift", "S3 characteristic foot shift g(t) - g(0)", ta, printed.shift, derived.shift,
                    std::abs(printed.shift - derived.shift)});
  }
  {
    const auto printed = evolve_scheme(SchemeId::S3, F, grid, p, ta, FormulaVariant::published);
    const auto derived = evolve_affine_pde(scheme_affine_problem(SchemeId::S3, p, F), grid, ta, steps_for(config, ta));
    const double np = norm(printed), nd = norm(derived);
    rows.push_back({"s3_norm", "S3 norm (printed amplitude e^{+wt/4} vs Weyl-derived)", ta, np, nd,
                    std::abs(np - nd)});
    rows.push_back({"s3_density", "L1 distance between normalised S3 densities", ta,
                    density_distance(printed, derived), 0.0, density_distance(printed, derived)});
  }
  {
    const auto s1p = evolve_scheme(SchemeId::S1, F, grid, p, ta, FormulaVariant::published);
    const auto s1d = evolve_affine_pde(scheme_affine_problem(SchemeId::S1, p, F), grid, ta, steps_for(config, ta));
    const double r = residual_phase(s1d.values, s1p.values);
    rows.push_back({"s1_solution_phase", "S1 phase residual after best global phase (rad)", ta, r, 0.0, r});
    const auto s2p = evolve_scheme(SchemeId::S2, F, grid, p, ta, FormulaVariant::published);
    const auto s2d = evolve_affine_pde(scheme_affine_problem(SchemeId::S2, p, F), grid, ta, steps_for(config, ta));
    const double r2 = residual_phase(s2d.values, s2p.values);
    rows.push_back({"s2_solution_phase", "S2 phase residual after best global phase (rad)", ta, r2, 0.0, r2});
    const double d2 = density_distance(s2p, s2d);
    rows.push_back({"s2_density", "L1 distance between normalised S2 densities", ta, d2, 0.0, d2});
  }
  {
    const GaussianPacketSpec probe{config.packet.k0, config.packet.sigma_k, 0.0};
    const double half = 10.0 * probe.sigma_k;
    const MomentumGrid g(probe.k0 - half, probe.k0 + half, 1024);
    const WeylCheck check = weyl_generator_check(p, 0.0, probe, g);
    rows.push_back({"s3_weyl_sign", "max |i hbar dC/dt - K3 C| with +i hbar w/4 (printed) vs -i hbar w/4", 0.0,
                    check.printed_residual, check.residual, std::abs(check.printed_residual - check.residual)});
  }
  {
    const double printed = printed_uncertainty_bound(p);
    const double derived = uncertainty_bound(p);
    rows.push_back({"robertson_bound", "lower bound on sigma_x sigma_v", 0.0, printed, derived, std::abs(printed - derived)});
    const auto ms = moments(gaussian_profile(config.packet, configured_grid(config)), p);
    const double product = ms.sigma_x * ms.sigma_v;
    rows.push_back({"minimal_gaussian_ratio", "sigma_x sigma_v of the initial packet divided by each bound", 0.0,
                    product / printed, product / derived, std::abs(product / printed - product / derived)});
  }
  {
    const ClassicalState s{0.3, 0.7, 1.1};
    const double printed = 0.5 * m * (s.v - A * s.t / m) * (s.v - A * s.t / m);
    PhysicalParams slow = p;
    slow.omega = 1e-6;
    const double numeric = constant_of_motion(ConstantKind::K1, slow, s);
    rows.push_back({"k1_slow_drive_limit", "K1 as w -> 0 at (x, v, t) = (0.3, 0.7, 1.1): printed (m/2)(v - At/m)^2 vs K1(w=1e-6)",
                    0.0, printed, numeric, std::abs(printed - numeric)});
    PhysicalParams weak = p;
    weak.A = 0.0;
    const double k3 = constant_of_motion(ConstantKind::K3, weak, s);
    rows.push_back({"k3_no_drive_limit", "K3 at A = 0, same state: printed limit 0 vs generating function", 0.0, 0.0, k3,
                    std::abs(k3)});
  }
  for (const auto& r : rows) {
    if (!std::isfinite(r.printed) || !std::isfinite(r.derived) || !std::isfinite(r.deviation))
      throw NumericalError("audit row " + r.name + " is not finite");
  }
  return rows;
}

SchemeReport build_scheme_report(const ScenarioConfig& config, const ReportOptions& options) {
  validate(config);
  SchemeReport report{.plan = plan_grid(config, options)};
  const MomentumGrid& grid = report.plan.grid;
  report.times = sample_times(config);
  const Profile F = packet_profile(config.packet);

  const std::size_t n_cfg = config.grid.n;
  const std::size_t stride = std::max<std::size_t>(1, (grid.size() - 1 + n_cfg - 2) / (n_cfg - 1));
  std::vector<std::size_t> out_index;
  for (std::size_t i = 0; i < grid.size(); i += stride) out_index.push_back(i);
  for (auto i : out_index) report.output_k.push_back(grid[i]);

  const std::size_t ns = config.schemes.size();
  const std::size_t nt = report.times.size();
  std::vector<AffineProblem> problems;
  for (auto s : config.schemes) {
    problems.push_back(scheme_problem_for(s, config.params, F));
    report.schemes.push_back({s, std::vector<RVector>(nt), std::vector<MomentSet>(nt)});
  }
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = a + 1; b < ns; ++b)
      report.distances.push_back({config.schemes[a], config.schemes[b], RVector(nt, 0.0)});

  std::string first_error;
  bool failed = false;
  const auto nt_signed = static_cast<std::int64_t>(nt);
#pragma omp parallel for schedule(dynamic) if (options.exec == Execution::parallel)
  for (std::int64_t j = 0; j < nt_signed; ++j) {
    try {
      const double t = report.times[j];
      std::vector<SpectralState> states;
      states.reserve(ns);
      for (std::size_t s = 0; s < ns; ++s) {
        states.push_back(
            evolve_affine_pde(problems[s], grid, t, steps_for(config, t), kDefaultExponentCap, Execution::serial));
        report.schemes[s].moments[j] = moments(states.back(), config.params);
        RVector rho(out_index.size());
        for (std::size_t i = 0; i < out_index.size(); ++i) rho[i] = std::norm(states.back().values[out_index[i]]);
        report.schemes[s].densities[j] = std::move(rho);
      }
      std::size_t d = 0;
      for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = a + 1; b < ns; ++b) report.distances[d++].values[j] = density_distance(states[a], states[b]);
    } catch (const std::exception& e) {
#pragma omp critical(drivenq_report_error)
      {
        if (!failed) first_error = e.what();
        failed = true;
      }
    }
  }
  if (failed) throw NumericalError(first_error);

  if (options.audit || config.published) report.audit = build_audit(config, grid);
  return report;
}

}  // namespace drivenq
