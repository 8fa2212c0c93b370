#pragma once

#include <vector>

#include "drivenq/core.hpp"

namespace drivenq {

/// Position and velocity moments of a momentum-space state.
struct MomentSet {
  double mean_x = 0.0;
  double mean_v = 0.0;
  double sigma_x = 0.0;
  double sigma_v = 0.0;
  double norm = 0.0;
};

/// <v> = (hbar/m)<k>; x acts as i d/dk, evaluated with a spectral derivative,
/// so <x> = Re \int conj(C) i C' dk / N and <x^2> = \int |C'|^2 dk / N.
/// Throws InvalidArgument on a zero-norm state.
MomentSet moments(const SpectralState& state, const PhysicalParams& params);

/// L1 distance between the two densities after normalising each; lies in [0, 2].
double density_distance(const SpectralState& a, const SpectralState& b);

/// max_j |<v>(t_j) - v_classical(t_j)| with v_classical from exact_trajectory.
/// All states must share one grid.
double ehrenfest_residual(const std::vector<SpectralState>& states, const PhysicalParams& params, double x0,
                          double v0);

}  // namespace drivenq
