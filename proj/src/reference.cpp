#include "drivenq/reference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "drivenq/com_schemes.hpp"
#include "drivenq/hamiltonian.hpp"
#include "drivenq/kernels.hpp"
#include "drivenq/spectral.hpp"

namespace drivenq {

PositionGrid::PositionGrid(double x_min, double x_max, std::size_t n) : x_min_(x_min), x_max_(x_max), n_(n) {
  if (n < 2 || !std::has_single_bit(n)) throw InvalidArgument("position grid size must be a power of two >= 2");
  if (!(x_min < x_max)) throw InvalidArgument("position grid needs x_min < x_max");
  dx_ = (x_max - x_min) / static_cast<double>(n);
}

PositionState sample_position_packet(const GaussianPacketSpec& spec, const PositionGrid& grid) {
  spec.validate();
  CVector psi(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) psi[j] = gaussian_position_amplitude(spec, grid[j]);
  return {grid, std::move(psi), 0.0};
}

namespace {

void check_leakage(const CVector& psi, double t) {
  constexpr std::size_t edge = 4;
  const std::size_t n = psi.size();
  for (std::size_t j = 0; j < std::min(edge, n); ++j) {
    const double worst = std::max(std::norm(psi[j]), std::norm(psi[n - 1 - j]));
    if (worst > 1e-12) {
      std::ostringstream msg;
      msg << "split-step boundary leakage: edge density " << worst << " at t=" << t << "; widen the position grid";
      throw NumericalError(msg.str());
    }
  }
}

}  // namespace

PositionState splitstep_evolve(const PositionState& initial, const PhysicalParams& params, double t, double dt) {
  params.validate();
  if (!(dt > 0.0)) throw InvalidArgument("split-step dt must be positive");
  if (!(t >= 0.0)) throw InvalidArgument("split-step end time must be nonnegative");
  const PositionGrid& grid = initial.grid;
  const std::size_t n = grid.size();
  const FourierTransform fft(n);
  const RVector kfreq = fft_frequencies(n, grid.spacing());
  const double inv_n = 1.0 / static_cast<double>(n);

  CVector psi = initial.psi;
  check_leakage(psi, initial.t);
  const auto steps = static_cast<std::size_t>(std::ceil(t / dt - 1e-12));
  double now = 0.0;
  auto kick = [&](double when, double h) {
    const double strength = params.A * std::cos(params.omega * when) * h / params.hbar;
    for (std::size_t j = 0; j < n; ++j) psi[j] *= std::polar(1.0, -grid[j] * strength);
  };
  for (std::size_t s = 0; s < steps; ++s) {
    const double next = (s + 1 == steps) ? t : static_cast<double>(s + 1) * dt;
    const double h = next - now;
    kick(now + 0.25 * h, 0.5 * h);
    fft.forward(psi);
    for (std::size_t j = 0; j < n; ++j)
      psi[j] *= std::polar(inv_n, -params.hbar * kfreq[j] * kfreq[j] * h / (2.0 * params.m));
    fft.backward(psi);
    kick(now + 0.75 * h, 0.5 * h);
    now = next;
    if (s % 64 == 63 || s + 1 == steps) check_leakage(psi, now);
  }
  return {grid, std::move(psi), initial.t + t};
}

SpectralState position_to_momentum(const PositionState& state, const MomentumGrid& grid, Execution exec) {
  const RVector k = grid.points();
  CVector out(k.size());
  if (exec == Execution::parallel)
    kernels::omp::position_to_momentum(state.psi, state.grid.x_min(), state.grid.spacing(), k, out);
  else
    kernels::serial::position_to_momentum(state.psi, state.grid.x_min(), state.grid.spacing(), k, out);
  return SpectralState(grid, std::move(out), state.t);
}

PositionMoments position_moments(const PositionState& state, double hbar) {
  const std::size_t n = state.psi.size();
  const double dx = state.grid.spacing();
  double norm = 0.0, sx = 0.0, sxx = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double rho = std::norm(state.psi[j]);
    const double x = state.grid[j];
    norm += rho;
    sx += rho * x;
    sxx += rho * x * x;
  }
  CVector spec = state.psi;
  FourierTransform(n).forward(spec);
  const RVector kfreq = fft_frequencies(n, dx);
  double pnorm = 0.0, sp = 0.0, spp = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double rho = std::norm(spec[j]);
    pnorm += rho;
    sp += rho * kfreq[j];
    spp += rho * kfreq[j] * kfreq[j];
  }
  const double mean_x = sx / norm;
  const double mean_k = sp / pnorm;
  return {norm * dx, mean_x, std::sqrt(std::max(0.0, sxx / norm - mean_x * mean_x)), hbar * mean_k,
          hbar * std::sqrt(std::max(0.0, spp / pnorm - mean_k * mean_k))};
}

const char* to_string(CoefficientEquation eq) {
  switch (eq) {
    case CoefficientEquation::hamiltonian:
      return "hamiltonian";
    case CoefficientEquation::s1:
      return "S1";
    case CoefficientEquation::s2:
      return "S2";
    case CoefficientEquation::s3:
      return "S3";
  }
  return "?";
}

namespace {

AdvectionProblem equation_problem(CoefficientEquation eq, const PhysicalParams& params, const Profile& initial) {
  switch (eq) {
    case CoefficientEquation::hamiltonian:
      return hamiltonian_problem(params, initial);
    case CoefficientEquation::s1:
      return scheme_problem(SchemeId::S1, params, initial);
    case CoefficientEquation::s2:
      return scheme_problem(SchemeId::S2, params, initial);
    case CoefficientEquation::s3:
      return scheme_problem(SchemeId::S3, params, initial);
  }
  throw InvalidArgument("unknown coefficient equation");
}

// Largest |lambda| of the sixth-order centred first-derivative symbol, times dk.
constexpr double kFd6SpectralRadius = 1.5861;
// RK4 stability interval on the imaginary axis is 2 sqrt(2).
constexpr double kRk4ImaginaryLimit = 2.8;

}  // namespace

SpectralState mol_evolve(const Profile& initial, const MomentumGrid& grid, const PhysicalParams& params,
                         CoefficientEquation equation, double t, double dt, Execution exec) {
  params.require_drive_frequency();
  if (!(dt > 0.0)) throw InvalidArgument("mol_evolve dt must be positive");
  if (!(t >= 0.0)) throw InvalidArgument("mol_evolve end time must be nonnegative");
  if (grid.size() < 7) throw InvalidArgument("mol_evolve needs at least 7 grid points");
  const AdvectionProblem pde = equation_problem(equation, params, initial);
  const std::size_t n = grid.size();
  const RVector k = grid.points();
  const double dk = grid.spacing();

  CVector y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = initial(k[i]);

  CVector deriv(n), alpha_rate(n);
  double max_rate = 0.0;
  auto rhs = [&](const CVector& state, double s, CVector& out) {
    if (exec == Execution::parallel)
      kernels::omp::fd6_derivative(state, dk, deriv);
    else
      kernels::serial::fd6_derivative(state, dk, deriv);
    double max_alpha = 0.0, max_beta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = pde.alpha(k[i], s);
      const cplx b = pde.beta(k[i], s);
      out[i] = -a * deriv[i] + b * state[i];
      max_alpha = std::max(max_alpha, std::abs(a));
      max_beta = std::max(max_beta, std::abs(b));
    }
    // zero inflow: the edge value is held where characteristics enter the grid
    if (pde.alpha(k.front(), s) > 0.0) out.front() = 0.0;
    if (pde.alpha(k.back(), s) < 0.0) out.back() = 0.0;
    max_rate = std::max(max_rate, max_alpha * kFd6SpectralRadius / dk + max_beta);
  };

  const auto steps = static_cast<std::size_t>(std::ceil(t / dt - 1e-12));
  CVector k1(n), k2(n), k3(n), k4(n), tmp(n);
  double now = 0.0;
  for (std::size_t step = 0; step < steps; ++step) {
    const double next = (step + 1 == steps) ? t : static_cast<double>(step + 1) * dt;
    const double h = next - now;
    max_rate = 0.0;
    rhs(y, now, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(tmp, now + 0.5 * h, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(tmp, now + 0.5 * h, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(tmp, next, k4);
    for (std::size_t i = 0; i < n; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (h * max_rate > kRk4ImaginaryLimit) {
      std::ostringstream msg;
      msg << "mol_evolve: dt=" << h << " violates the RK4 stability bound (dt * rate = " << h * max_rate
          << " > " << kRk4ImaginaryLimit << ") at t=" << now;
      throw NumericalError(msg.str());
    }
    if (std::norm(y.front()) > 1e-12 || std::norm(y.back()) > 1e-12) {
      std::ostringstream msg;
      msg << "mol_evolve: boundary leakage at t=" << next << " (edge density "
          << std::max(std::norm(y.front()), std::norm(y.back())) << "); widen the grid";
      throw NumericalError(msg.str());
    }
    now = next;
  }
  return SpectralState(grid, std::move(y), t);
}

}  // namespace drivenq
