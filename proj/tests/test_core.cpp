#include <gtest/gtest.h>

#include <cmath>

#include "drivenq/core.hpp"

using namespace drivenq;

TEST(BuildGrid, ThreePoints) {
  const MomentumGrid g = build_grid(-1.0, 1.0, 3);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_DOUBLE_EQ(g[0], -1.0);
  EXPECT_DOUBLE_EQ(g[1], 0.0);
  EXPECT_DOUBLE_EQ(g[2], 1.0);
  EXPECT_DOUBLE_EQ(g.spacing(), 1.0);
}

TEST(BuildGrid, EndpointIncluded) {
  const MomentumGrid g = build_grid(0.0, 7.0, 8);
  EXPECT_DOUBLE_EQ(g.spacing(), 1.0);
  EXPECT_DOUBLE_EQ(g[7], 7.0);
}

TEST(BuildGrid, SpacingFormula) {
  const MomentumGrid g = build_grid(-20.0, 20.0, 1024);
  EXPECT_DOUBLE_EQ(g.spacing(), 40.0 / 1023.0);
}

TEST(BuildGrid, RejectsBadInput) {
  EXPECT_THROW(build_grid(0.0, 1.0, 1), InvalidArgument);
  EXPECT_THROW(build_grid(1.0, 1.0, 10), InvalidArgument);
  EXPECT_THROW(build_grid(2.0, 1.0, 10), InvalidArgument);
}

TEST(BuildGrid, PointsReproducible) {
  const MomentumGrid a = build_grid(-3.7, 11.2, 777);
  const MomentumGrid b = build_grid(-3.7, 11.2, 777);
  const RVector pa = a.points(), pb = b.points();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    EXPECT_EQ(pa[i], pb[i]);
    EXPECT_EQ(pa[i], -3.7 + static_cast<double>(i) * ((11.2 - -3.7) / 776.0));
  }
}

TEST(GaussianProfile, PeakAtCentre) {
  const MomentumGrid g(-10.0, 10.0, 201);
  const SpectralState s = gaussian_profile({0.0, 1.0, 0.0}, g);
  std::size_t best = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (std::abs(s.values[i]) > std::abs(s.values[best])) best = i;
  EXPECT_DOUBLE_EQ(g[best], 0.0);
}

TEST(GaussianProfile, OffsetOnlyChangesPhase) {
  const MomentumGrid g(-10.0, 10.0, 301);
  const SpectralState a = gaussian_profile({0.7, 1.3, 0.0}, g);
  const SpectralState b = gaussian_profile({0.7, 1.3, -4.2}, g);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(std::abs(a.values[i]), std::abs(b.values[i]), 1e-15);
}

TEST(GaussianProfile, UnitNormAgainstRefinedQuadrature) {
  const GaussianPacketSpec spec{2.0, 0.5, 0.0};
  const double coarse = norm(gaussian_profile(spec, MomentumGrid(-20.0, 20.0, 2048)));
  const double fine = norm(gaussian_profile(spec, MomentumGrid(-20.0, 20.0, 4095)));
  EXPECT_NEAR(coarse, fine, 1e-10);
  EXPECT_NEAR(coarse, 1.0, 1e-10);
}

TEST(GaussianProfile, RejectsNonpositiveSpread) {
  const MomentumGrid g(-1.0, 1.0, 11);
  EXPECT_THROW(gaussian_profile({0.0, 0.0, 0.0}, g), InvalidArgument);
  EXPECT_THROW(gaussian_profile({0.0, -1.0, 0.0}, g), InvalidArgument);
}

TEST(GaussianProfile, PositionFormMatchesInverseTransform) {
  const GaussianPacketSpec spec{0.8, 0.6, 1.5};
  const MomentumGrid g(spec.k0 - 10.0, spec.k0 + 10.0, 4001);
  for (double x : {-2.0, 0.3, 1.5, 4.0}) {
    CVector samples(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) samples[i] = gaussian_amplitude(spec, g[i]) * std::polar(1.0, g[i] * x);
    cplx sum{};
    for (std::size_t i = 0; i < g.size(); ++i) sum += (i == 0 || i + 1 == g.size() ? 0.5 : 1.0) * samples[i];
    const cplx oracle = sum * g.spacing() / std::sqrt(2.0 * kPi);
    EXPECT_LT(std::abs(oracle - gaussian_position_amplitude(spec, x)), 1e-12);
  }
}

TEST(Norm, ZeroState) {
  const MomentumGrid g(-1.0, 1.0, 5);
  EXPECT_EQ(norm(SpectralState(g, CVector(5), 0.0)), 0.0);
}

TEST(Norm, QuadraticScaling) {
  const MomentumGrid g(-8.0, 8.0, 513);
  SpectralState s = gaussian_profile({0.0, 1.0, 0.0}, g);
  const double base = norm(s);
  for (auto& v : s.values) v *= 2.0;
  EXPECT_NEAR(norm(s), 4.0 * base, 1e-14);
}

TEST(Norm, UnitModulusInvariance) {
  const MomentumGrid g(-8.0, 8.0, 513);
  SpectralState s = gaussian_profile({0.3, 1.0, 2.0}, g);
  const double base = norm(s);
  for (auto& v : s.values) v *= std::polar(1.0, 2.345);
  EXPECT_NEAR(norm(s), base, 1e-15);
}

TEST(Norm, ConvergesAtLeastSecondOrder) {
  const GaussianPacketSpec spec{0.0, 1.0, 0.0};
  double previous = -1.0;
  for (std::size_t n : {9, 17, 33, 65}) {
    const double err = std::abs(norm(gaussian_profile(spec, MomentumGrid(-8.0, 8.0, n))) - 1.0);
    if (previous > 0.0 && previous > 1e-13) {
      EXPECT_LT(err, previous / 3.9) << "n=" << n;
    }
    previous = err;
  }
  EXPECT_LT(previous, 1e-12);
}

TEST(SpectralState, RejectsSizeMismatch) {
  const MomentumGrid g(-1.0, 1.0, 5);
  EXPECT_THROW(SpectralState(g, CVector(4), 0.0), InvalidArgument);
}

TEST(AlignGlobalPhase, RemovesConstantPhase) {
  const MomentumGrid g(-8.0, 8.0, 257);
  const SpectralState s = gaussian_profile({0.5, 1.0, 1.0}, g);
  CVector rotated = s.values;
  for (auto& v : rotated) v *= std::polar(1.0, -1.1);
  EXPECT_LT(max_abs_difference(s.values, align_global_phase(s.values, rotated)), 1e-15);
}

TEST(PhysicalParams, Validation) {
  EXPECT_THROW((PhysicalParams{0.0, 1.0, 1.0, 1.0}).validate(), InvalidArgument);
  EXPECT_THROW((PhysicalParams{1.0, 1.0, 1.0, -1.0}).validate(), InvalidArgument);
  EXPECT_THROW((PhysicalParams{1.0, 1.0, 0.0, 1.0}).require_drive_frequency(), InvalidArgument);
  EXPECT_NO_THROW((PhysicalParams{1.0, 1.0, 0.0, 1.0}).validate());
}
