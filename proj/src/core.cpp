#include "drivenq/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace drivenq {

void PhysicalParams::validate() const {
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("mass m must be positive, got " + std::to_string(m));
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw InvalidArgument("hbar must be positive, got " + std::to_string(hbar));
  if (!std::isfinite(A)) throw InvalidArgument("drive amplitude A must be finite");
  if (!std::isfinite(omega)) throw InvalidArgument("omega must be finite");
}

void PhysicalParams::require_drive_frequency() const {
  validate();
  if (omega == 0.0)
    throw InvalidArgument("omega = 0 is not admissible here; study the limit with a sequence omega -> 0");
}

MomentumGrid::MomentumGrid(double k_min, double k_max, std::size_t n) : k_min_(k_min), k_max_(k_max), n_(n) {
  if (n < 2) throw InvalidArgument("grid needs n >= 2 points, got " + std::to_string(n));
  if (!(k_min < k_max) || !std::isfinite(k_min) || !std::isfinite(k_max))
    throw InvalidArgument("grid needs finite k_min < k_max");
  dk_ = (k_max - k_min) / static_cast<double>(n - 1);
}

RVector MomentumGrid::points() const {
  RVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)[i];
  return out;
}

MomentumGrid build_grid(double k_min, double k_max, std::size_t n) { return MomentumGrid(k_min, k_max, n); }

void GaussianPacketSpec::validate() const {
  if (!(sigma_k > 0.0) || !std::isfinite(sigma_k))
    throw InvalidArgument("sigma_k must be positive, got " + std::to_string(sigma_k));
  if (!std::isfinite(k0) || !std::isfinite(x0)) throw InvalidArgument("packet centre must be finite");
}

cplx gaussian_amplitude(const GaussianPacketSpec& spec, double k) {
  const double s2 = spec.sigma_k * spec.sigma_k;
  const double amp = std::pow(2.0 * kPi * s2, -0.25) * std::exp(-(k - spec.k0) * (k - spec.k0) / (4.0 * s2));
  return amp * std::polar(1.0, -k * spec.x0);
}

cplx gaussian_position_amplitude(const GaussianPacketSpec& spec, double x) {
  // \int exp(-(k-k0)^2/(4 s^2) + i k (x - x0)) dk = 2 s sqrt(pi) exp(-s^2 (x-x0)^2) e^{i k0 (x - x0)}
  const double s = spec.sigma_k;
  const double d = x - spec.x0;
  const double amp = std::pow(2.0 * kPi * s * s, -0.25) * s * std::sqrt(2.0) * std::exp(-s * s * d * d);
  return amp * std::polar(1.0, spec.k0 * d);
}

SpectralState::SpectralState(MomentumGrid g, CVector v, double time) : grid(g), values(std::move(v)), t(time) {
  if (values.size() != grid.size())
    throw InvalidArgument("state has " + std::to_string(values.size()) + " values for a grid of " +
                          std::to_string(grid.size()));
}

SpectralState gaussian_profile(const GaussianPacketSpec& spec, const MomentumGrid& grid) {
  spec.validate();
  CVector values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = gaussian_amplitude(spec, grid[i]);
  return SpectralState(grid, std::move(values), 0.0);
}

double trapezoid(const RVector& samples, double spacing) {
  if (samples.empty()) return 0.0;
  if (samples.size() == 1) return 0.0;
  double sum = 0.5 * (samples.front() + samples.back());
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) sum += samples[i];
  return sum * spacing;
}

RVector density(const SpectralState& state) {
  RVector rho(state.values.size());
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = std::norm(state.values[i]);
  return rho;
}

cplx overlap(const CVector& a, const CVector& b, double spacing) {
  if (a.size() != b.size()) throw InvalidArgument("overlap of vectors with different lengths");
  if (a.empty()) return {};
  cplx sum = 0.5 * (std::conj(a.front()) * b.front() + std::conj(a.back()) * b.back());
  for (std::size_t i = 1; i + 1 < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum * spacing;
}

CVector align_global_phase(const CVector& reference, const CVector& candidate) {
  const cplx ov = overlap(reference, candidate, 1.0);
  CVector out = candidate;
  if (std::abs(ov) == 0.0) return out;
  const cplx rot = std::conj(ov) / std::abs(ov);
  for (auto& v : out) v *= rot;
  return out;
}

double max_abs_difference(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("comparing vectors with different lengths");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double norm(const SpectralState& state) { return trapezoid(density(state), state.grid.spacing()); }

}  // namespace drivenq
