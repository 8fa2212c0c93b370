#include "drivenq/characteristics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "drivenq/kernels.hpp"

namespace drivenq {
namespace {

void check_trace_args(double t, std::size_t steps) {
  if (steps < 1) throw InvalidArgument("characteristic tracing needs steps >= 1");
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("characteristic tracing needs finite t >= 0");
}

double trace_position(const RealCoefficient& alpha, double k, double t_from, double t_to, std::size_t steps) {
  const double h = (t_to - t_from) / static_cast<double>(steps);
  double s = t_from;
  for (std::size_t i = 0; i < steps; ++i) {
    const double a1 = alpha(k, s);
    const double a2 = alpha(k + 0.5 * h * a1, s + 0.5 * h);
    const double a3 = alpha(k + 0.5 * h * a2, s + 0.5 * h);
    const double a4 = alpha(k + h * a3, s + h);
    k += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
    s = t_from + static_cast<double>(i + 1) * h;
  }
  if (!std::isfinite(k)) {
    std::ostringstream msg;
    msg << "non-finite characteristic while tracing from t=" << t_from << " to t=" << t_to;
    throw NumericalError(msg.str());
  }
  return k;
}

SpectralState assemble(const Profile& initial, const MomentumGrid& grid, double t, const RVector& foot,
                       const CVector& exponent, double exponent_cap) {
  CVector values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(foot[i]) || !std::isfinite(exponent[i].real()) || !std::isfinite(exponent[i].imag())) {
      std::ostringstream msg;
      msg << "non-finite coefficient along the characteristic through k=" << grid[i] << ", t=" << t;
      throw NumericalError(msg.str());
    }
    if (exponent[i].real() > exponent_cap) {
      std::ostringstream msg;
      msg << "accumulated exponent real part " << exponent[i].real() << " exceeds cap " << exponent_cap
          << " at k=" << grid[i] << ", t=" << t;
      throw NumericalError(msg.str());
    }
    values[i] = initial(foot[i]) * std::exp(exponent[i]);
  }
  return SpectralState(grid, std::move(values), t);
}

}  // namespace

std::size_t default_steps(double t, double omega) {
  const double raw = std::ceil(200.0 * std::abs(t) * std::max(std::abs(omega), 1.0));
  return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
}

double trace_characteristic_backward(const RealCoefficient& alpha, double k, double t, std::size_t steps) {
  check_trace_args(t, steps);
  return trace_position(alpha, k, t, 0.0, steps);
}

double trace_characteristic_forward(const RealCoefficient& alpha, double k0, double t, std::size_t steps) {
  check_trace_args(t, steps);
  return trace_position(alpha, k0, 0.0, t, steps);
}

SpectralState evolve_linear_pde(const AdvectionProblem& problem, const MomentumGrid& grid, double t,
                                std::size_t steps, double exponent_cap, Execution exec) {
  check_trace_args(t, steps);
  if (!problem.alpha || !problem.beta || !problem.initial_profile)
    throw InvalidArgument("advection problem has an unset coefficient");
  const RVector k = grid.points();
  RVector foot(k.size());
  CVector exponent(k.size());
  if (exec == Execution::parallel)
    kernels::omp::trace_characteristics(problem, k, t, steps, foot, exponent);
  else
    kernels::serial::trace_characteristics(problem, k, t, steps, foot, exponent);
  return assemble(problem.initial_profile, grid, t, foot, exponent, exponent_cap);
}

AdvectionProblem AffineProblem::as_general() const {
  AdvectionProblem g;
  g.alpha = [a1 = alpha1, a0 = alpha0](double k, double t) { return a1(t) * k + a0(t); };
  g.beta = [b2 = beta2, b1 = beta1, b0 = beta0](double k, double t) { return (b2(t) * k + b1(t)) * k + b0(t); };
  g.initial_profile = initial_profile;
  return g;
}

AffineCharacteristicMap trace_affine(const AffineProblem& p, double t, std::size_t steps) {
  check_trace_args(t, steps);
  // k(s) = P(s) k + Q(s), P(t) = 1, Q(t) = 0; the exponent integrands are
  // b2 P^2, 2 b2 P Q + b1 P and b2 Q^2 + b1 Q + b0.
  struct State {
    double P, Q;
    cplx E2, E1, E0;
  };
  auto rhs = [&p](const State& y, double s) {
    const double a1 = p.alpha1(s);
    const double a0 = p.alpha0(s);
    const cplx b2 = p.beta2(s);
    const cplx b1 = p.beta1(s);
    const cplx b0 = p.beta0(s);
    return State{a1 * y.P, a1 * y.Q + a0, b2 * y.P * y.P, 2.0 * b2 * y.P * y.Q + b1 * y.P,
                 b2 * y.Q * y.Q + b1 * y.Q + b0};
  };
  auto axpy = [](const State& y, double h, const State& d) {
    return State{y.P + h * d.P, y.Q + h * d.Q, y.E2 + h * d.E2, y.E1 + h * d.E1, y.E0 + h * d.E0};
  };
  const double h = -t / static_cast<double>(steps);
  State y{1.0, 0.0, {}, {}, {}};
  double s = t;
  for (std::size_t i = 0; i < steps; ++i) {
    const State d1 = rhs(y, s);
    const State d2 = rhs(axpy(y, 0.5 * h, d1), s + 0.5 * h);
    const State d3 = rhs(axpy(y, 0.5 * h, d2), s + 0.5 * h);
    const State d4 = rhs(axpy(y, h, d3), s + h);
    y.P += h / 6.0 * (d1.P + 2.0 * d2.P + 2.0 * d3.P + d4.P);
    y.Q += h / 6.0 * (d1.Q + 2.0 * d2.Q + 2.0 * d3.Q + d4.Q);
    y.E2 += h / 6.0 * (d1.E2 + 2.0 * d2.E2 + 2.0 * d3.E2 + d4.E2);
    y.E1 += h / 6.0 * (d1.E1 + 2.0 * d2.E1 + 2.0 * d3.E1 + d4.E1);
    y.E0 += h / 6.0 * (d1.E0 + 2.0 * d2.E0 + 2.0 * d3.E0 + d4.E0);
    s = t + static_cast<double>(i + 1) * h;
  }
  AffineCharacteristicMap map{t, y.P, y.Q, -y.E2, -y.E1, -y.E0};
  const std::array<double, 7> all{map.scale, map.shift, map.e2.real(), map.e2.imag(), map.e1.real(), map.e1.imag(),
                                  map.e0.real()};
  if (!std::all_of(all.begin(), all.end(), [](double v) { return std::isfinite(v); }))
    throw NumericalError("non-finite affine characteristic map at t=" + std::to_string(t));
  return map;
}

SpectralState evolve_affine_pde(const AffineProblem& problem, const MomentumGrid& grid, double t, std::size_t steps,
                                double exponent_cap, Execution exec) {
  const AffineCharacteristicMap map = trace_affine(problem, t, steps);
  const auto n = static_cast<std::int64_t>(grid.size());
  RVector foot(grid.size());
  CVector exponent(grid.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      foot[i] = map.foot(grid[i]);
      exponent[i] = map.exponent(grid[i]);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      foot[i] = map.foot(grid[i]);
      exponent[i] = map.exponent(grid[i]);
    }
  }
  return assemble(problem.initial_profile, grid, t, foot, exponent, exponent_cap);
}

}  // namespace drivenq
