#include "drivenq/com_schemes.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "drivenq/kernels.hpp"
#include "drivenq/spectral.hpp"

namespace drivenq {
namespace {

using boost::math::quadrature::gauss_kronrod;

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  double error = 0.0;
  const double value = gauss_kronrod<double, 31>::integrate(f, a, b, 20, 1e-13, &error);
  if (!std::isfinite(value)) throw NumericalError("phase quadrature produced a non-finite value");
  return value;
}

// Coefficients of a symbol written as c2 k^2 + c1 k + c0.
struct Quadratic {
  double c2, c1, c0;
  double operator()(double k) const { return (c2 * k + c1) * k + c0; }
};

Quadratic symbol_coefficients(SchemeId scheme, const PhysicalParams& p, double t, FormulaVariant variant) {
  const double m = p.m, A = p.A, w = p.omega, hb = p.hbar;
  const double sn = std::sin(w * t);
  const double half = std::sin(0.5 * w * t);
  const double one_minus_cos = 2.0 * half * half;
  const bool printed = variant == FormulaVariant::published;
  // third term of s1 and B: A^2 sin^2 / 2 m w^2 (printed with A)
  const double drive_sq = (printed ? A : A * A) / (2.0 * m * w * w) * sn * sn;
  switch (scheme) {
    case SchemeId::S1:
      return {hb * hb / (2.0 * m), A * hb / (m * w) * sn, drive_sq};
    case SchemeId::S2: {
      const double last = (printed ? A * A / (w * w) : A * A / (m * w * w)) * one_minus_cos;
      return {hb * hb / (2.0 * m), A * hb / (m * w) * sn - A * hb * t / m,
              drive_sq - A * A * t / (m * w) * sn + last};
    }
    case SchemeId::S3:
      // (m w t / 2)(hbar k/m + A sin/(m w))^2 + (A hbar k / 2 m w)(cos - 1) + (A^2 / 2 m w^2) sin (cos - 1)
      return {w * t * hb * hb / (2.0 * m), t * A * hb * sn / m - A * hb / (2.0 * m * w) * one_minus_cos,
              t * A * A * sn * sn / (2.0 * m * w) - A * A / (2.0 * m * w * w) * sn * one_minus_cos};
  }
  throw InvalidArgument("unknown scheme");
}

double advection_rate(SchemeId scheme, const PhysicalParams& p, double k, double t) {
  switch (scheme) {
    case SchemeId::S1:
      return 0.0;
    case SchemeId::S2:
      return -p.A / p.hbar;
    case SchemeId::S3:
      return 0.5 * p.omega * k + p.A / (2.0 * p.hbar) * std::sin(p.omega * t);
  }
  return 0.0;
}

double amplitude_rate(SchemeId scheme, const PhysicalParams& p) {
  return scheme == SchemeId::S3 ? -0.25 * p.omega : 0.0;
}

SpectralState printed_solution(SchemeId scheme, const Profile& F, const MomentumGrid& grid, const PhysicalParams& p,
                               double t, double exponent_cap) {
  CVector values(grid.size());
  const double hb = p.hbar;
  switch (scheme) {
    case SchemeId::S1:
      for (std::size_t i = 0; i < grid.size(); ++i) values[i] = F(grid[i]) * std::polar(1.0, -printed_phi1(p, grid[i], t));
      break;
    case SchemeId::S2: {
      const double drift = p.A * t / hb;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double k = grid[i];
        const double phi = integrate(
            [&](double s) {
              return diagonal_symbol(SchemeId::S2, p, k + drift - p.A * s / hb, s, FormulaVariant::published);
            },
            0.0, t) / hb;
        values[i] = F(k + drift) * std::polar(1.0, -phi);
      }
      break;
    }
    case SchemeId::S3: {
      const double growth = 0.25 * p.omega * t;
      if (growth > exponent_cap) {
        std::ostringstream msg;
        msg << "printed S3 amplitude exponent w t / 4 = " << growth << " exceeds cap " << exponent_cap;
        throw NumericalError(msg.str());
      }
      const double decay = std::exp(-0.5 * p.omega * t);
      const double g_t = printed_g(p, t);
      const double g_0 = printed_g(p, 0.0);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double k = grid[i];
        const double phi = integrate(
            [&](double s) {
              const double arg = std::exp(0.5 * p.omega * s) * (k - decay + g_t - printed_g(p, s));
              return diagonal_symbol(SchemeId::S3, p, arg, s, FormulaVariant::published);
            },
            0.0, t) / hb;
        values[i] = F(k * decay + g_t - g_0) * std::exp(cplx{growth, -phi});
      }
      break;
    }
  }
  return SpectralState(grid, std::move(values), t);
}

}  // namespace

const char* to_string(SchemeId id) {
  switch (id) {
    case SchemeId::S1:
      return "S1";
    case SchemeId::S2:
      return "S2";
    case SchemeId::S3:
      return "S3";
  }
  return "?";
}

double diagonal_symbol(SchemeId scheme, const PhysicalParams& params, double k, double t, FormulaVariant variant) {
  params.require_drive_frequency();
  return symbol_coefficients(scheme, params, t, variant)(k);
}

AdvectionProblem scheme_problem(SchemeId scheme, const PhysicalParams& params, Profile initial) {
  params.require_drive_frequency();
  const PhysicalParams p = params;
  AdvectionProblem prob;
  prob.alpha = [p, scheme](double k, double t) { return advection_rate(scheme, p, k, t); };
  prob.beta = [p, scheme](double k, double t) {
    return cplx{amplitude_rate(scheme, p), -diagonal_symbol(scheme, p, k, t) / p.hbar};
  };
  prob.initial_profile = std::move(initial);
  return prob;
}

AffineProblem scheme_affine_problem(SchemeId scheme, const PhysicalParams& params, Profile initial) {
  params.require_drive_frequency();
  const PhysicalParams p = params;
  AffineProblem prob;
  prob.alpha1 = [p, scheme](double t) { return advection_rate(scheme, p, 1.0, t) - advection_rate(scheme, p, 0.0, t); };
  prob.alpha0 = [p, scheme](double t) { return advection_rate(scheme, p, 0.0, t); };
  auto coef = [p, scheme](double t) { return symbol_coefficients(scheme, p, t, FormulaVariant::derived); };
  prob.beta2 = [p, coef](double t) { return cplx{0.0, -coef(t).c2 / p.hbar}; };
  prob.beta1 = [p, coef](double t) { return cplx{0.0, -coef(t).c1 / p.hbar}; };
  prob.beta0 = [p, coef, scheme](double t) { return cplx{amplitude_rate(scheme, p), -coef(t).c0 / p.hbar}; };
  prob.initial_profile = std::move(initial);
  return prob;
}

SpectralState evolve_scheme(SchemeId scheme, const Profile& initial, const MomentumGrid& grid,
                            const PhysicalParams& params, double t, FormulaVariant variant, std::size_t steps,
                            double exponent_cap, Execution exec) {
  params.require_drive_frequency();
  if (!(t >= 0.0)) throw InvalidArgument("evolve_scheme needs t >= 0");
  if (variant == FormulaVariant::published) return printed_solution(scheme, initial, grid, params, t, exponent_cap);
  if (steps == 0) steps = default_steps(t, params.omega);
  return evolve_linear_pde(scheme_problem(scheme, params, initial), grid, t, steps, exponent_cap, exec);
}

double printed_g(const PhysicalParams& params, double t) {
  params.require_drive_frequency();
  const double w = params.omega;
  return params.A / (5.0 * params.hbar * w) * (2.0 * std::cos(w * t) + params.A * std::sin(w * t));
}

Scheme3CharMap scheme3_char_map(const PhysicalParams& params, double t, FormulaVariant variant, std::size_t steps) {
  params.require_drive_frequency();
  if (variant == FormulaVariant::published)
    return {std::exp(-0.5 * params.omega * t), printed_g(params, t) - printed_g(params, 0.0)};
  if (steps == 0) steps = default_steps(t, params.omega);
  const PhysicalParams p = params;
  const RealCoefficient alpha = [p](double k, double s) { return advection_rate(SchemeId::S3, p, k, s); };
  const double shift = trace_characteristic_backward(alpha, 0.0, t, steps);
  const double scale = trace_characteristic_backward(alpha, 1.0, t, steps) - shift;
  return {scale, shift};
}

double printed_phi1(const PhysicalParams& params, double k, double t) {
  params.require_drive_frequency();
  const double m = params.m, A = params.A, w = params.omega, hb = params.hbar;
  return hb * k * k * t / (2.0 * m) - k * A / (m * w * w) * (std::cos(w * t) - 1.0) +
         A / (2.0 * m * w * w) * (t * t / 2.0 - std::sin(2.0 * w * t) / (4.0 * w));
}

double quadrature_phi1(const PhysicalParams& params, double k, double t) {
  params.require_drive_frequency();
  return integrate([&](double s) { return diagonal_symbol(SchemeId::S1, params, k, s); }, 0.0, t) / params.hbar;
}

WeylCheck weyl_generator_check(const PhysicalParams& params, double t, const GaussianPacketSpec& test_state,
                               const MomentumGrid& grid, DerivativeMethod method) {
  params.require_drive_frequency();
  if (grid.size() < 16) throw InvalidArgument("weyl_generator_check: grid too coarse (need at least 16 points)");
  const Profile F = [test_state](double k) { return gaussian_amplitude(test_state, k); };
  const double delta = 1e-3;
  const std::size_t steps = std::max<std::size_t>(64, default_steps(t + 4.0 * delta, params.omega));
  auto at = [&](double time) {
    return evolve_scheme(SchemeId::S3, F, grid, params, time, FormulaVariant::derived, steps).values;
  };

  const CVector c = at(t);
  double peak = 0.0;
  for (const auto& v : c) peak = std::max(peak, std::abs(v));
  if (std::abs(c.front()) > 1e-8 * peak || std::abs(c.back()) > 1e-8 * peak)
    throw InvalidArgument("weyl_generator_check: grid too narrow, state does not decay at the edges");

  const std::size_t n = grid.size();
  CVector dcdt(n);
  if (t >= 2.0 * delta) {
    const CVector p1 = at(t + delta), p2 = at(t + 2.0 * delta), m1 = at(t - delta), m2 = at(t - 2.0 * delta);
    for (std::size_t i = 0; i < n; ++i) dcdt[i] = (-p2[i] + 8.0 * p1[i] - 8.0 * m1[i] + m2[i]) / (12.0 * delta);
  } else {
    const CVector c1 = at(t + delta), c2 = at(t + 2.0 * delta), c3 = at(t + 3.0 * delta), c4 = at(t + 4.0 * delta);
    for (std::size_t i = 0; i < n; ++i)
      dcdt[i] = (-25.0 * c[i] + 48.0 * c1[i] - 36.0 * c2[i] + 16.0 * c3[i] - 3.0 * c4[i]) / (12.0 * delta);
  }

  CVector dcdk(n);
  if (method == DerivativeMethod::spectral)
    dcdk = spectral_derivative(c, grid.spacing());
  else
    kernels::serial::fd6_derivative(c, grid.spacing(), dcdk);

  const double hb = params.hbar, w = params.omega;
  const double drift = params.A / 2.0 * std::sin(w * t);
  WeylCheck out;
  for (std::size_t i = n / 8; i < n - n / 8; ++i) {
    const double k = grid[i];
    const cplx lhs = kI * hb * dcdt[i];
    const cplx common = diagonal_symbol(SchemeId::S3, params, k, t) * c[i] - kI * (0.5 * hb * w * k + drift) * dcdk[i];
    const cplx weyl = kI * hb * w / 4.0 * c[i];
    out.residual = std::max(out.residual, std::abs(lhs - (common - weyl)));
    out.printed_residual = std::max(out.printed_residual, std::abs(lhs - (common + weyl)));
  }
  return out;
}

double uncertainty_bound(const PhysicalParams& params) {
  params.validate();
  return params.hbar / (2.0 * params.m);
}

double printed_uncertainty_bound(const PhysicalParams& params) {
  params.validate();
  return params.hbar / params.m;
}

}  // namespace drivenq
