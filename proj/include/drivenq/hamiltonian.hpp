#pragma once

// Hamiltonian quantization of the driven particle. With H = p^2/2m + x A cos wt
// and x -> i d/dk, the momentum coefficients obey
//
//     dC/dt - (A/hbar) cos(wt) dC/dk = -(i hbar k^2 / 2m) C.

#include <functional>

#include "drivenq/characteristics.hpp"
#include "drivenq/core.hpp"

namespace drivenq {

enum class HamiltonianVariant {
  published_closed_form,  // F(k + (A/hbar w) sin wt) exp(-i hbar k^2 t / 2m), taken literally
  exact_characteristics,  // full characteristics solution of the coefficient PDE
};

/// f(t) in H' = H + f(t); shifts only a global phase.
struct GaugeFunction {
  std::function<double(double)> f;
};

/// H = p^2/2m + x A cos wt.
double hamiltonian_value(const PhysicalParams& params, double x, double p, double t);

AdvectionProblem hamiltonian_problem(const PhysicalParams& params, Profile initial);
AffineProblem hamiltonian_affine_problem(const PhysicalParams& params, Profile initial);

/// steps == 0 selects default_steps(t, omega).
SpectralState evolve_hamiltonian(const Profile& initial, const MomentumGrid& grid, const PhysicalParams& params,
                                 double t, HamiltonianVariant variant, std::size_t steps = 0,
                                 Execution exec = Execution::parallel);

/// \int_0^t f(s) ds by adaptive Gauss-Kronrod; throws NumericalError if it does not converge.
double gauge_phase_integral(const GaugeFunction& gauge, double t);

/// Multiplies by exp(-(i/hbar) \int_0^t f).
SpectralState apply_gauge(const SpectralState& state, const GaugeFunction& gauge, double t, double hbar);

/// Density-level and phase-level comparison of the two variants at time t.
struct ClosedFormPhaseAudit {
  double t = 0.0;
  double max_density_deviation = 0.0;
  /// largest |arg| of exact/printed after the best global phase, over points
  /// whose density exceeds 1e-6 of the peak
  double residual_phase = 0.0;
  bool removable_as_global_phase = false;
};

ClosedFormPhaseAudit audit_closed_form_phase(const Profile& initial, const MomentumGrid& grid, const PhysicalParams& params,
                                double t);

}  // namespace drivenq
