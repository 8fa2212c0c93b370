#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "drivenq/com_schemes.hpp"
#include "drivenq/hamiltonian.hpp"
#include "drivenq/observables.hpp"

using namespace drivenq;

namespace {

const GaussianPacketSpec kPacket{};

Profile packet() {
  return [](double k) { return gaussian_amplitude(kPacket, k); };
}

}  // namespace

TEST(Moments, SymmetricPacketVelocity) {
  const PhysicalParams p{2.0, 1.0, 1.0, 0.5};
  const GaussianPacketSpec spec{1.5, 0.7, 0.0};
  const MomentSet m = moments(gaussian_profile(spec, MomentumGrid(-8.0, 11.0, 1024)), p);
  EXPECT_NEAR(m.mean_v, p.hbar * 1.5 / p.m, 1e-12);
  EXPECT_NEAR(m.mean_x, 0.0, 1e-12);
}

TEST(Moments, MinimalGaussianProduct) {
  const PhysicalParams p{1.3, 1.0, 1.0, 0.7};
  const GaussianPacketSpec spec{0.4, 0.9, 2.0};
  const MomentSet m = moments(gaussian_profile(spec, MomentumGrid(-10.0, 10.0, 1024)), p);
  EXPECT_NEAR(m.sigma_x * m.sigma_v, p.hbar / (2.0 * p.m), 1e-8);
  EXPECT_NEAR(m.mean_x, 2.0, 1e-10);
  EXPECT_NEAR(m.sigma_x, 1.0 / (2.0 * 0.9), 1e-10);
}

TEST(Moments, RejectsZeroNorm) {
  const MomentumGrid g(-1.0, 1.0, 16);
  EXPECT_THROW(moments(SpectralState(g, CVector(16), 0.0), {}), InvalidArgument);
}

TEST(Moments, Scheme1VelocityFrozen) {
  const MomentumGrid grid(-10.0, 10.0, 1024);
  const MomentSet m0 = moments(gaussian_profile(kPacket, grid), {});
  for (double t : {0.5, 2.0, 4.0}) {
    const MomentSet m = moments(evolve_scheme(SchemeId::S1, packet(), grid, {}, t, FormulaVariant::derived), {});
    EXPECT_NEAR(m.mean_v, m0.mean_v, 1e-10);
    EXPECT_NEAR(m.sigma_v, m0.sigma_v, 1e-10);
  }
}

TEST(DensityDistance, IdentityAndSymmetry) {
  const MomentumGrid grid(-12.0, 12.0, 512);
  const auto a = gaussian_profile(kPacket, grid);
  const auto b = evolve_hamiltonian(packet(), grid, {}, 1.0, HamiltonianVariant::exact_characteristics);
  EXPECT_EQ(density_distance(a, a), 0.0);
  EXPECT_EQ(density_distance(a, b), density_distance(b, a));
}

TEST(DensityDistance, DisjointSupports) {
  const MomentumGrid grid(-40.0, 40.0, 2048);
  const auto a = gaussian_profile({-20.0, 1.0, 0.0}, grid);
  const auto b = gaussian_profile({20.0, 1.0, 0.0}, grid);
  EXPECT_NEAR(density_distance(a, b), 2.0, 1e-12);
}

TEST(DensityDistance, GridMismatchRejected) {
  const auto a = gaussian_profile(kPacket, MomentumGrid(-8.0, 8.0, 64));
  const auto b = gaussian_profile(kPacket, MomentumGrid(-8.0, 8.0, 65));
  EXPECT_THROW(density_distance(a, b), InvalidArgument);
}

TEST(DensityDistance, HamiltonianVersusScheme2HalfPeriod) {
  const MomentumGrid grid(-16.0, 12.0, 1024);
  const auto h = evolve_hamiltonian(packet(), grid, {}, kPi, HamiltonianVariant::exact_characteristics);
  const auto s2 = evolve_scheme(SchemeId::S2, packet(), grid, {}, kPi, FormulaVariant::derived);
  EXPECT_GT(density_distance(h, s2), 0.1);
}

TEST(Ehrenfest, HamiltonianFollowsClassicalVelocity) {
  const MomentumGrid grid(-12.0, 12.0, 1024);
  std::vector<SpectralState> states;
  for (int j = 0; j <= 16; ++j)
    states.push_back(evolve_hamiltonian(packet(), grid, {}, 2.0 * kPi * j / 16.0, HamiltonianVariant::exact_characteristics));
  EXPECT_LE(ehrenfest_residual(states, {}, 0.0, 0.0), 1e-6);
}

TEST(Ehrenfest, FreeParticleAllSchemes) {
  const PhysicalParams p{1.0, 0.0, 1.0, 1.0};
  const MomentumGrid grid(-12.0, 12.0, 1024);
  const GaussianPacketSpec spec{0.0, 1.0, 0.0};
  const Profile f = [spec](double k) { return gaussian_amplitude(spec, k); };
  for (auto id : {SchemeId::S1, SchemeId::S2}) {
    std::vector<SpectralState> states;
    for (double t : {0.0, 1.0, 2.0}) states.push_back(evolve_scheme(id, f, grid, p, t, FormulaVariant::derived));
    EXPECT_LE(ehrenfest_residual(states, p, 0.0, 0.0), 1e-10);
  }
  const MomentumGrid wide(-30.0, 30.0, 2048);
  std::vector<SpectralState> s3;
  for (double t : {0.0, 1.0, 2.0}) s3.push_back(evolve_scheme(SchemeId::S3, f, wide, p, t, FormulaVariant::derived));
  EXPECT_LE(ehrenfest_residual(s3, p, 0.0, 0.0), 1e-10);
}

TEST(Ehrenfest, Scheme1ResidualIsClassicalSwing) {
  const MomentumGrid grid(-12.0, 12.0, 1024);
  std::vector<SpectralState> states;
  double swing = 0.0;
  for (int j = 0; j <= 64; ++j) {
    const double t = 2.0 * kPi * j / 64.0;
    states.push_back(evolve_scheme(SchemeId::S1, packet(), grid, {}, t, FormulaVariant::derived));
    swing = std::max(swing, std::abs(std::sin(t)));
  }
  EXPECT_NEAR(ehrenfest_residual(states, {}, 0.0, 0.0), swing, 1e-6);
}

TEST(Ehrenfest, MeshMismatchRejected) {
  std::vector<SpectralState> states{gaussian_profile(kPacket, MomentumGrid(-8.0, 8.0, 64)),
                                    gaussian_profile(kPacket, MomentumGrid(-8.0, 8.0, 65))};
  EXPECT_THROW(ehrenfest_residual(states, {}, 0.0, 0.0), InvalidArgument);
}
