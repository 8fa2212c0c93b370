#include <gtest/gtest.h>

#include <cmath>

#include "drivenq/classical.hpp"
#include "drivenq/com_schemes.hpp"
#include "drivenq/observables.hpp"
#include "drivenq/reference.hpp"

using namespace drivenq;

namespace {

const GaussianPacketSpec kPacket{};

Profile packet() {
  return [](double k) { return gaussian_amplitude(kPacket, k); };
}

}  // namespace

// Each symbol is the classical constant at x = 0, v = hbar k / m; the x part
// becomes the advection term.
TEST(Symbols, MatchGeneratingFunctions) {
  const PhysicalParams p{1.4, 0.7, 1.3, 0.9};
  for (double k : {-2.0, 0.3, 1.7})
    for (double t : {0.0, 0.9, 4.4}) {
      const ClassicalState s{0.0, p.hbar * k / p.m, t};
      EXPECT_NEAR(diagonal_symbol(SchemeId::S1, p, k, t), constant_of_motion(ConstantKind::K1, p, s), 1e-12);
      EXPECT_NEAR(diagonal_symbol(SchemeId::S2, p, k, t), constant_of_motion(ConstantKind::K2, p, s), 1e-12);
      EXPECT_NEAR(diagonal_symbol(SchemeId::S3, p, k, t), constant_of_motion(ConstantKind::K3, p, s), 1e-12);
    }
}

TEST(Symbols, PrintedVariantsDifferOffUnitParameters) {
  const PhysicalParams p{2.0, 3.0, 1.0, 1.0};
  EXPECT_GT(std::abs(diagonal_symbol(SchemeId::S1, p, 0.5, 1.0, FormulaVariant::published) -
                     diagonal_symbol(SchemeId::S1, p, 0.5, 1.0)),
            1e-3);
}

TEST(Scheme1, ModulusPreserved) {
  const MomentumGrid grid(-10.0, 10.0, 512);
  const SpectralState s = evolve_scheme(SchemeId::S1, packet(), grid, {}, 5.0, FormulaVariant::derived);
  const SpectralState f = gaussian_profile(kPacket, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(std::abs(s.values[i]), std::abs(f.values[i]), 1e-12);
}

TEST(Scheme1, PhaseMatchesQuadrature) {
  const PhysicalParams p{1.2, 0.8, 1.5, 1.0};
  const MomentumGrid grid(-10.0, 10.0, 257);
  const double t = 2.4;
  const SpectralState s = evolve_scheme(SchemeId::S1, packet(), grid, p, t, FormulaVariant::derived);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx expected = gaussian_amplitude(kPacket, grid[i]) * std::polar(1.0, -quadrature_phi1(p, grid[i], t));
    EXPECT_LT(std::abs(s.values[i] - expected), 1e-10);
  }
}

TEST(Scheme1, PrintedPhaseDeviates) {
  EXPECT_GT(std::abs(printed_phi1({}, 0.5, 2.0) - quadrature_phi1({}, 0.5, 2.0)), 1e-3);
}

TEST(Scheme2, DensityDriftsLinearly) {
  const PhysicalParams p{1.0, 0.9, 1.0, 1.1};
  const MomentumGrid grid(-16.0, 12.0, 1024);
  for (double t : {0.7, 3.0, 2.0 * kPi}) {
    const SpectralState s = evolve_scheme(SchemeId::S2, packet(), grid, p, t, FormulaVariant::derived);
    for (std::size_t i = 0; i < grid.size(); ++i)
      EXPECT_NEAR(std::norm(s.values[i]), std::norm(gaussian_amplitude(kPacket, grid[i] + p.A * t / p.hbar)), 1e-8);
  }
}

TEST(Scheme2, PrintedDensityMatchesDerived) {
  const MomentumGrid grid(-16.0, 12.0, 512);
  const auto a = evolve_scheme(SchemeId::S2, packet(), grid, {}, 2.0, FormulaVariant::derived);
  const auto b = evolve_scheme(SchemeId::S2, packet(), grid, {}, 2.0, FormulaVariant::published);
  EXPECT_LT(density_distance(a, b), 1e-10);
}

TEST(Scheme3, NormConservedOverPeriod) {
  const MomentumGrid grid(-220.0, 220.0, 4096);
  for (double t : {0.5, kPi, 2.0 * kPi}) {
    const SpectralState s = evolve_scheme(SchemeId::S3, packet(), grid, {}, t, FormulaVariant::derived);
    EXPECT_NEAR(norm(s), 1.0, 1e-6) << "t=" << t;
  }
}

TEST(Scheme3, PrintedAmplitudeGrows) {
  const MomentumGrid grid(-60.0, 60.0, 2048);
  const double t = 2.0;
  const SpectralState s = evolve_scheme(SchemeId::S3, packet(), grid, {}, t, FormulaVariant::published);
  EXPECT_NEAR(norm(s), std::exp(t), 1e-6);
}

TEST(Scheme3, CharacteristicMap) {
  const PhysicalParams p{};
  const double t = kPi;
  const auto derived = scheme3_char_map(p, t, FormulaVariant::derived);
  EXPECT_NEAR(derived.scale, std::exp(-0.5 * t), 1e-12);
  EXPECT_NEAR(derived.shift, -0.4 * std::exp(-0.5 * kPi) - 0.4, 1e-10);
  const auto printed = scheme3_char_map(p, t, FormulaVariant::published);
  EXPECT_NEAR(printed.shift, printed_g(p, t) - printed_g(p, 0.0), 1e-15);
  EXPECT_NEAR(printed.shift, -0.8, 1e-12);
}

TEST(Scheme3, WeylSignFromGenerator) {
  const MomentumGrid grid(-10.0, 10.0, 2048);
  const WeylCheck check = weyl_generator_check({}, 0.0, kPacket, grid);
  EXPECT_LE(check.residual, 1e-6);
  EXPECT_GT(check.printed_residual, 0.1);
  const WeylCheck fd = weyl_generator_check({}, 0.0, kPacket, grid, DerivativeMethod::finite_difference6);
  EXPECT_LE(fd.residual, 1e-6);
}

TEST(Scheme3, WeylCheckRejectsNarrowGrid) {
  EXPECT_THROW(weyl_generator_check({}, 0.0, kPacket, MomentumGrid(-2.0, 2.0, 256)), InvalidArgument);
  EXPECT_THROW(weyl_generator_check({}, 0.0, kPacket, MomentumGrid(-10.0, 10.0, 8)), InvalidArgument);
}

TEST(Scheme3, MolAgreement) {
  const PhysicalParams p{};
  const MomentumGrid grid(-24.0, 24.0, 1024);
  const double t = 1.0;
  const auto mol = mol_evolve(packet(), grid, p, CoefficientEquation::s3, t, 1e-3);
  const auto chars = evolve_scheme(SchemeId::S3, packet(), grid, p, t, FormulaVariant::derived);
  EXPECT_LT(density_distance(mol, chars), 1e-5);
}

TEST(Uncertainty, Bounds) {
  const PhysicalParams p{2.0, 1.0, 1.0, 0.5};
  EXPECT_DOUBLE_EQ(uncertainty_bound(p), 0.125);
  EXPECT_DOUBLE_EQ(printed_uncertainty_bound(p), 0.25);
}
