#include "drivenq/hamiltonian.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace drivenq {

double hamiltonian_value(const PhysicalParams& params, double x, double p, double t) {
  params.validate();
  return p * p / (2.0 * params.m) + x * params.A * std::cos(params.omega * t);
}

AdvectionProblem hamiltonian_problem(const PhysicalParams& params, Profile initial) {
  params.validate();
  const PhysicalParams p = params;
  AdvectionProblem prob;
  prob.alpha = [p](double, double t) { return -(p.A / p.hbar) * std::cos(p.omega * t); };
  prob.beta = [p](double k, double) { return cplx{0.0, -p.hbar * k * k / (2.0 * p.m)}; };
  prob.initial_profile = std::move(initial);
  return prob;
}

AffineProblem hamiltonian_affine_problem(const PhysicalParams& params, Profile initial) {
  params.validate();
  const PhysicalParams p = params;
  AffineProblem prob;
  prob.alpha1 = [](double) { return 0.0; };
  prob.alpha0 = [p](double t) { return -(p.A / p.hbar) * std::cos(p.omega * t); };
  prob.beta2 = [p](double) { return cplx{0.0, -p.hbar / (2.0 * p.m)}; };
  prob.beta1 = [](double) { return cplx{}; };
  prob.beta0 = [](double) { return cplx{}; };
  prob.initial_profile = std::move(initial);
  return prob;
}

SpectralState evolve_hamiltonian(const Profile& initial, const MomentumGrid& grid, const PhysicalParams& params,
                                 double t, HamiltonianVariant variant, std::size_t steps, Execution exec) {
  params.require_drive_frequency();
  if (variant == HamiltonianVariant::published_closed_form) {
    const double drift = params.A / (params.hbar * params.omega) * std::sin(params.omega * t);
    CVector values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double k = grid[i];
      values[i] = initial(k + drift) * std::polar(1.0, -params.hbar * k * k * t / (2.0 * params.m));
    }
    return SpectralState(grid, std::move(values), t);
  }
  if (steps == 0) steps = default_steps(t, params.omega);
  return evolve_linear_pde(hamiltonian_problem(params, initial), grid, t, steps, kDefaultExponentCap, exec);
}

double gauge_phase_integral(const GaugeFunction& gauge, double t) {
  if (!gauge.f) throw InvalidArgument("gauge function is unset");
  if (t == 0.0) return 0.0;
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(gauge.f, 0.0, t, 15, 1e-14, &error);
  if (!std::isfinite(value) || error > 1e-10 * std::max(1.0, std::abs(value)))
    throw NumericalError("gauge phase quadrature did not converge (error estimate " + std::to_string(error) + ")");
  return value;
}

SpectralState apply_gauge(const SpectralState& state, const GaugeFunction& gauge, double t, double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  const cplx factor = std::polar(1.0, -gauge_phase_integral(gauge, t) / hbar);
  CVector values = state.values;
  for (auto& v : values) v *= factor;
  return SpectralState(state.grid, std::move(values), state.t);
}

ClosedFormPhaseAudit audit_closed_form_phase(const Profile& initial, const MomentumGrid& grid, const PhysicalParams& params,
                                double t) {
  const auto printed = evolve_hamiltonian(initial, grid, params, t, HamiltonianVariant::published_closed_form);
  const auto exact = evolve_hamiltonian(initial, grid, params, t, HamiltonianVariant::exact_characteristics);
  ClosedFormPhaseAudit audit;
  audit.t = t;
  const RVector rho_p = density(printed);
  const RVector rho_e = density(exact);
  double peak = 0.0;
  for (std::size_t i = 0; i < rho_e.size(); ++i) {
    audit.max_density_deviation = std::max(audit.max_density_deviation, std::abs(rho_p[i] - rho_e[i]));
    peak = std::max(peak, rho_e[i]);
  }
  const CVector aligned = align_global_phase(exact.values, printed.values);
  for (std::size_t i = 0; i < rho_e.size(); ++i) {
    if (rho_e[i] < 1e-6 * peak) continue;
    audit.residual_phase = std::max(audit.residual_phase, std::abs(std::arg(exact.values[i] * std::conj(aligned[i]))));
  }
  audit.removable_as_global_phase = audit.residual_phase < 1e-6;
  return audit;
}

}  // namespace drivenq
