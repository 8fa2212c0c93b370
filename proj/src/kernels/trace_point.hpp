#pragma once

#include <cstddef>

#include "drivenq/characteristics.hpp"

namespace drivenq::kernels::detail {

struct TracePoint {
  double foot;
  cplx exponent;
};

// RK4 on (k, E) with dk/ds = alpha, dE/ds = beta, from s = t down to s = 0.
inline TracePoint trace_point(const AdvectionProblem& p, double k, double t, std::size_t steps) {
  const double h = -t / static_cast<double>(steps);
  double s = t;
  cplx e{};
  for (std::size_t i = 0; i < steps; ++i) {
    const double a1 = p.alpha(k, s);
    const cplx b1 = p.beta(k, s);
    const double kk2 = k + 0.5 * h * a1;
    const double a2 = p.alpha(kk2, s + 0.5 * h);
    const cplx b2 = p.beta(kk2, s + 0.5 * h);
    const double kk3 = k + 0.5 * h * a2;
    const double a3 = p.alpha(kk3, s + 0.5 * h);
    const cplx b3 = p.beta(kk3, s + 0.5 * h);
    const double kk4 = k + h * a3;
    const double a4 = p.alpha(kk4, s + h);
    const cplx b4 = p.beta(kk4, s + h);
    k += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
    e += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
    s = t + static_cast<double>(i + 1) * h;
  }
  // accumulated from t to 0
  return {k, -e};
}

}  // namespace drivenq::kernels::detail
