#pragma once

// Classical motion under the periodic force -A cos(omega t): closed-form
// trajectories, an RK4 oracle, the characteristic values C1/C2 and the three
// energy-valued constants of motion built from them.

#include <utility>
#include <vector>

#include "drivenq/core.hpp"

namespace drivenq {

struct ClassicalState {
  double x = 0.0;
  double v = 0.0;
  double t = 0.0;
};

enum class ConstantKind { K1, K2, K3 };

/// x(t) = x0 + v0 t + (A/m w^2)(cos wt - 1), v(t) = v0 - (A/m w) sin wt.
ClassicalState exact_trajectory(const PhysicalParams& params, double x0, double v0, double t);

/// Classical RK4 on (x, v); the last step is shortened to land on t.
ClassicalState rk4_trajectory(const PhysicalParams& params, double x0, double v0, double t, double dt);

/// Same integration, returning the state every `stride` steps (first and last included).
std::vector<ClassicalState> rk4_samples(const PhysicalParams& params, double x0, double v0, double t, double dt,
                                        std::size_t stride);

struct CharacteristicValues {
  double c1;
  double c2;
};

/// C1 = v + (A/m w) sin wt,  C2 = t C1 + (A/m w^2)(cos wt - 1) - x.
CharacteristicValues characteristic_values(const PhysicalParams& params, const ClassicalState& state);

/// K1 = (m/2) C1^2, K2 = (m/2) C1^2 - A C2, K3 = (m w / 2) C1 C2.
double constant_of_motion(ConstantKind kind, const PhysicalParams& params, const ClassicalState& state);

/// K1 expanded: (1/2) m v^2 + (v A / w) sin wt + (A^2 / 2 m w^2) sin^2 wt.
double k1_expanded(const PhysicalParams& params, const ClassicalState& state);

/// K1 with the third coefficient exactly as printed (A instead of A^2), for audit only.
double k1_printed(const PhysicalParams& params, const ClassicalState& state);

/// K3 with the printed v(cos wt - 1) coefficient A/(m w) instead of A/(2 w), for audit only.
double k3_printed(const PhysicalParams& params, const ClassicalState& state);

}  // namespace drivenq
