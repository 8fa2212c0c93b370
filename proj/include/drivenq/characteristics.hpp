#pragma once

// Method of characteristics for first-order linear PDEs in (k, t):
//
//     dC/dt + alpha(k, t) dC/dk = beta(k, t) C,     C(k, 0) = F(k).
//
// Along dk/ds = alpha(k(s), s) the PDE reduces to dC/ds = beta C, so
// C(k, t) = F(k(0)) exp(int_0^t beta(k(s), s) ds) with k(t) = k.
//
// Two routes are provided. The general route traces every grid point
// independently with RK4 (position and exponent integrated together). The
// affine route covers alpha = a1(t) k + a0(t), beta = b2(t) k^2 + b1(t) k + b0(t):
// the foot map is then affine and the exponent quadratic in k, so one RK4
// sweep over time gives the whole family of characteristics.

#include <cstddef>
#include <functional>

#include "drivenq/core.hpp"

namespace drivenq {

using RealCoefficient = std::function<double(double k, double t)>;
using ComplexCoefficient = std::function<cplx(double k, double t)>;
using Profile = std::function<cplx(double k)>;

struct AdvectionProblem {
  RealCoefficient alpha;
  ComplexCoefficient beta;
  Profile initial_profile;
};

enum class Execution { serial, parallel };

inline constexpr double kDefaultExponentCap = 50.0;

/// ceil(200 t max(|omega|, 1)), at least 1.
std::size_t default_steps(double t, double omega);

/// Foot point k(0) of the characteristic through (k, t).
double trace_characteristic_backward(const RealCoefficient& alpha, double k, double t, std::size_t steps);

/// End point k(t) of the characteristic starting at (k0, 0).
double trace_characteristic_forward(const RealCoefficient& alpha, double k0, double t, std::size_t steps);

/// Solves the initial-value problem at time t on every grid point.
/// Throws NumericalError on non-finite coefficients or when the real part of
/// the accumulated exponent exceeds exponent_cap.
SpectralState evolve_linear_pde(const AdvectionProblem& problem, const MomentumGrid& grid, double t,
                                std::size_t steps, double exponent_cap = kDefaultExponentCap,
                                Execution exec = Execution::parallel);

using TimeFunction = std::function<double(double t)>;
using ComplexTimeFunction = std::function<cplx(double t)>;

struct AffineProblem {
  TimeFunction alpha1;  // dk/ds = alpha1(s) k + alpha0(s)
  TimeFunction alpha0;
  ComplexTimeFunction beta2;  // beta = beta2 k^2 + beta1 k + beta0
  ComplexTimeFunction beta1;
  ComplexTimeFunction beta0;
  Profile initial_profile;

  /// The same PDE in general form, for the per-point route.
  AdvectionProblem as_general() const;
};

/// k(0) = scale k + shift;  int_0^t beta ds = e2 k^2 + e1 k + e0.
struct AffineCharacteristicMap {
  double t = 0.0;
  double scale = 1.0;
  double shift = 0.0;
  cplx e2{};
  cplx e1{};
  cplx e0{};

  double foot(double k) const { return scale * k + shift; }
  cplx exponent(double k) const { return (e2 * k + e1) * k + e0; }
};

AffineCharacteristicMap trace_affine(const AffineProblem& problem, double t, std::size_t steps);

SpectralState evolve_affine_pde(const AffineProblem& problem, const MomentumGrid& grid, double t, std::size_t steps,
                                double exponent_cap = kDefaultExponentCap, Execution exec = Execution::parallel);

}  // namespace drivenq
