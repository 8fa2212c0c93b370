#include "drivenq/classical.hpp"

#include <cmath>

namespace drivenq {
namespace {

// cos(wt) - 1 without cancellation for small wt.
double cos_minus_one(double wt) {
  const double s = std::sin(0.5 * wt);
  return -2.0 * s * s;
}

struct Derivative {
  double dx;
  double dv;
};

Derivative rhs(const PhysicalParams& p, double v, double t) { return {v, -(p.A / p.m) * std::cos(p.omega * t)}; }

ClassicalState rk4_step(const PhysicalParams& p, ClassicalState s, double h) {
  const auto k1 = rhs(p, s.v, s.t);
  const auto k2 = rhs(p, s.v + 0.5 * h * k1.dv, s.t + 0.5 * h);
  const auto k3 = rhs(p, s.v + 0.5 * h * k2.dv, s.t + 0.5 * h);
  const auto k4 = rhs(p, s.v + h * k3.dv, s.t + h);
  s.x += h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  s.v += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
  s.t += h;
  return s;
}

void check_rk4_args(double t, double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("rk4 step dt must be positive");
  if (!(t >= 0.0)) throw InvalidArgument("rk4 end time must be nonnegative");
}

}  // namespace

ClassicalState exact_trajectory(const PhysicalParams& params, double x0, double v0, double t) {
  params.require_drive_frequency();
  const double w = params.omega;
  const double a = params.A / params.m;
  return {x0 + v0 * t + a / (w * w) * cos_minus_one(w * t), v0 - a / w * std::sin(w * t), t};
}

std::vector<ClassicalState> rk4_samples(const PhysicalParams& params, double x0, double v0, double t, double dt,
                                        std::size_t stride) {
  params.validate();
  check_rk4_args(t, dt);
  if (stride == 0) stride = 1;
  const auto steps = static_cast<std::size_t>(std::ceil(t / dt - 1e-12));
  std::vector<ClassicalState> out;
  ClassicalState s{x0, v0, 0.0};
  out.push_back(s);
  for (std::size_t i = 0; i < steps; ++i) {
    // fixed step, landing exactly on t
    const double t_next = (i + 1 == steps) ? t : static_cast<double>(i + 1) * dt;
    s = rk4_step(params, s, t_next - s.t);
    s.t = t_next;
    if ((i + 1) % stride == 0 || i + 1 == steps) out.push_back(s);
  }
  return out;
}

ClassicalState rk4_trajectory(const PhysicalParams& params, double x0, double v0, double t, double dt) {
  check_rk4_args(t, dt);
  const auto samples = rk4_samples(params, x0, v0, t, dt, static_cast<std::size_t>(-1));
  return samples.back();
}

CharacteristicValues characteristic_values(const PhysicalParams& params, const ClassicalState& s) {
  params.require_drive_frequency();
  const double w = params.omega;
  const double c1 = s.v + params.A / (params.m * w) * std::sin(w * s.t);
  const double c2 = s.t * c1 + params.A / (params.m * w * w) * cos_minus_one(w * s.t) - s.x;
  return {c1, c2};
}

double constant_of_motion(ConstantKind kind, const PhysicalParams& params, const ClassicalState& state) {
  const auto [c1, c2] = characteristic_values(params, state);
  switch (kind) {
    case ConstantKind::K1:
      return 0.5 * params.m * c1 * c1;
    case ConstantKind::K2:
      return 0.5 * params.m * c1 * c1 - params.A * c2;
    case ConstantKind::K3:
      return 0.5 * params.m * params.omega * c1 * c2;
  }
  throw InvalidArgument("unknown constant kind");
}

double k1_expanded(const PhysicalParams& params, const ClassicalState& s) {
  params.require_drive_frequency();
  const double w = params.omega;
  const double sn = std::sin(w * s.t);
  return 0.5 * params.m * s.v * s.v + s.v * params.A / w * sn +
         params.A * params.A / (2.0 * params.m * w * w) * sn * sn;
}

double k1_printed(const PhysicalParams& params, const ClassicalState& s) {
  params.require_drive_frequency();
  const double w = params.omega;
  const double sn = std::sin(w * s.t);
  return 0.5 * params.m * s.v * s.v + s.v * params.A / w * sn + params.A / (2.0 * params.m * w * w) * sn * sn;
}

double k3_printed(const PhysicalParams& params, const ClassicalState& s) {
  params.require_drive_frequency();
  const double m = params.m, A = params.A, w = params.omega, t = s.t, v = s.v, x = s.x;
  const double sn = std::sin(w * t);
  const double cm1 = cos_minus_one(w * t);
  return m * w * t / 2.0 * (v * v + 2.0 * v * A / (m * w) * sn + A * A / (m * m * w * w) * sn * sn) +
         A * v / (m * w) * cm1 + A * A / (2.0 * m * w * w) * sn * cm1 - m * w / 2.0 * (x * v + A * x / (m * w) * sn);
}

}  // namespace drivenq
