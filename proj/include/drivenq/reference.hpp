#pragma once

// Independent oracles. splitstep_evolve solves the Schrodinger equation with
// H = p^2/2m + x A cos wt directly in position space (Strang splitting, FFT
// kinetic step). mol_evolve integrates the momentum-space coefficient PDEs by
// the method of lines: sixth-order finite differences in k, RK4 in time.

#include <cstddef>

#include "drivenq/characteristics.hpp"
#include "drivenq/core.hpp"

namespace drivenq {

/// Periodic grid x_j = x_min + j dx, dx = (x_max - x_min) / n, n a power of two.
class PositionGrid {
 public:
  PositionGrid(double x_min, double x_max, std::size_t n);
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t size() const { return n_; }
  double spacing() const { return dx_; }
  double operator[](std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double dx_;
};

struct PositionState {
  PositionGrid grid;
  CVector psi;
  double t = 0.0;
};

PositionState sample_position_packet(const GaussianPacketSpec& spec, const PositionGrid& grid);

/// Strang step: half potential kick at t + dt/4, exact kinetic step, half kick at t + 3dt/4.
/// The last step is shortened to land on t_end. Aborts with NumericalError if
/// the density on the outermost points exceeds 1e-12.
PositionState splitstep_evolve(const PositionState& initial, const PhysicalParams& params, double t, double dt);

/// C(k) = dx / sqrt(2 pi) sum_j psi_j exp(-i k x_j) on the given momentum grid.
SpectralState position_to_momentum(const PositionState& state, const MomentumGrid& grid,
                                   Execution exec = Execution::parallel);

struct PositionMoments {
  double norm;
  double mean_x;
  double sigma_x;
  double mean_p;
  double sigma_p;
};

PositionMoments position_moments(const PositionState& state, double hbar);

enum class CoefficientEquation { hamiltonian, s1, s2, s3 };

const char* to_string(CoefficientEquation eq);

/// Method-of-lines solution at time t (step count ceil(t/dt)). Aborts with
/// NumericalError if dt exceeds the RK4 stability bound or the solution leaks
/// through the grid edges.
SpectralState mol_evolve(const Profile& initial, const MomentumGrid& grid, const PhysicalParams& params,
                         CoefficientEquation equation, double t, double dt, Execution exec = Execution::parallel);

}  // namespace drivenq
