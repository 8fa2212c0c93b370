#include "drivenq/observables.hpp"

#include <algorithm>
#include <cmath>

#include "drivenq/classical.hpp"
#include "drivenq/spectral.hpp"

namespace drivenq {

MomentSet moments(const SpectralState& state, const PhysicalParams& params) {
  params.validate();
  const std::size_t n = state.values.size();
  const double dk = state.grid.spacing();
  const double total = norm(state);
  if (!(total > 0.0)) throw InvalidArgument("moments of a zero-norm state are undefined");

  const CVector deriv = spectral_derivative(state.values, dk);
  RVector wk(n), wkk(n), wx(n), wxx(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = state.grid[i];
    const double rho = std::norm(state.values[i]);
    wk[i] = k * rho;
    wkk[i] = k * k * rho;
    wx[i] = std::real(std::conj(state.values[i]) * kI * deriv[i]);
    wxx[i] = std::norm(deriv[i]);
  }
  const double mean_k = trapezoid(wk, dk) / total;
  const double var_k = std::max(0.0, trapezoid(wkk, dk) / total - mean_k * mean_k);
  const double mean_x = trapezoid(wx, dk) / total;
  const double var_x = std::max(0.0, trapezoid(wxx, dk) / total - mean_x * mean_x);

  const double vel = params.hbar / params.m;
  return {mean_x, vel * mean_k, std::sqrt(var_x), vel * std::sqrt(var_k), total};
}

double density_distance(const SpectralState& a, const SpectralState& b) {
  if (!(a.grid == b.grid)) throw InvalidArgument("density_distance needs states on the same grid");
  const double na = norm(a);
  const double nb = norm(b);
  if (!(na > 0.0) || !(nb > 0.0)) throw InvalidArgument("density_distance of a zero-norm state");
  RVector diff(a.values.size());
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] = std::abs(std::norm(a.values[i]) / na - std::norm(b.values[i]) / nb);
  return trapezoid(diff, a.grid.spacing());
}

double ehrenfest_residual(const std::vector<SpectralState>& states, const PhysicalParams& params, double x0,
                          double v0) {
  if (states.empty()) return 0.0;
  double worst = 0.0;
  for (const auto& s : states) {
    if (!(s.grid == states.front().grid)) throw InvalidArgument("ehrenfest_residual: states on different grids");
    const double v_cl = exact_trajectory(params, x0, v0, s.t).v;
    worst = std::max(worst, std::abs(moments(s, params).mean_v - v_cl));
  }
  return worst;
}

}  // namespace drivenq
