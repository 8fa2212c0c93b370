#include <gtest/gtest.h>

#include <cmath>

#include "drivenq/com_schemes.hpp"
#include "drivenq/kernels.hpp"

using namespace drivenq;

TEST(Kernels, TraceSerialMatchesOmp) {
  const GaussianPacketSpec spec{};
  const AdvectionProblem problem =
      scheme_problem(SchemeId::S2, PhysicalParams{}, [spec](double k) { return gaussian_amplitude(spec, k); });
  const RVector k = MomentumGrid(-12.0, 12.0, 333).points();
  RVector f1(k.size()), f2(k.size());
  CVector e1(k.size()), e2(k.size());
  kernels::serial::trace_characteristics(problem, k, 3.0, 600, f1, e1);
  kernels::omp::trace_characteristics(problem, k, 3.0, 600, f2, e2);
  for (std::size_t i = 0; i < k.size(); ++i) {
    EXPECT_EQ(f1[i], f2[i]);
    EXPECT_EQ(e1[i], e2[i]);
  }
}

TEST(Kernels, StencilSerialMatchesOmp) {
  const MomentumGrid g(-6.0, 6.0, 1001);
  CVector in(g.size()), a(g.size()), b(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) in[i] = std::polar(std::exp(-g[i] * g[i]), 2.0 * g[i]);
  kernels::serial::fd6_derivative(in, g.spacing(), a);
  kernels::omp::fd6_derivative(in, g.spacing(), b);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Kernels, StencilSixthOrderInterior) {
  auto err = [](std::size_t n) {
    const MomentumGrid g(0.0, 2.0 * kPi, n);
    CVector in(n), out(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = std::sin(g[i]);
    kernels::serial::fd6_derivative(in, g.spacing(), out);
    double worst = 0.0;
    for (std::size_t i = 3; i + 3 < n; ++i) worst = std::max(worst, std::abs(out[i] - std::cos(g[i])));
    return worst;
  };
  const double ratio = err(41) / err(81);
  EXPECT_GT(ratio, 50.0);
  EXPECT_LT(ratio, 80.0);
}

TEST(Kernels, StencilExactOnQuadraticsAtEdges) {
  const MomentumGrid g(-1.0, 1.0, 21);
  CVector in(g.size()), out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) in[i] = g[i] * g[i] - 0.5 * g[i];
  kernels::serial::fd6_derivative(in, g.spacing(), out);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(out[i].real(), 2.0 * g[i] - 0.5, 1e-12);
}

TEST(Kernels, StencilRejectsShortInput) {
  CVector in(6), out(6);
  EXPECT_THROW(kernels::serial::fd6_derivative(in, 0.1, out), InvalidArgument);
}

TEST(Kernels, TransformSerialMatchesOmp) {
  CVector psi(256);
  for (std::size_t j = 0; j < psi.size(); ++j) psi[j] = std::polar(std::exp(-0.01 * j), 0.3 * j);
  const RVector k = MomentumGrid(-5.0, 5.0, 97).points();
  CVector a(k.size()), b(k.size());
  kernels::serial::position_to_momentum(psi, -3.0, 0.05, k, a);
  kernels::omp::position_to_momentum(psi, -3.0, 0.05, k, b);
  for (std::size_t i = 0; i < k.size(); ++i) EXPECT_EQ(a[i], b[i]);
}
