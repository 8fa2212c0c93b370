#pragma once

// Shared value types for the driven-particle quantization library: physical
// parameters, the uniform wavenumber grid, Gaussian initial packets and the
// sampled coefficient state C(k, t).

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace drivenq {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;
using RVector = std::vector<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Precondition violations (bad grid, nonpositive spreads, omega = 0, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical run that had to abort, e.g. on overflow or grid leakage.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mass m, drive amplitude A, angular frequency omega and hbar.
struct PhysicalParams {
  double m = 1.0;
  double A = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  /// Throws unless m > 0 and hbar > 0.
  void validate() const;
  /// validate() plus omega != 0; every closed form with 1/omega calls this.
  void require_drive_frequency() const;

  bool operator==(const PhysicalParams&) const = default;
};

/// Endpoint-inclusive uniform grid: point i = k_min + i * dk.
class MomentumGrid {
 public:
  MomentumGrid(double k_min, double k_max, std::size_t n);

  double k_min() const { return k_min_; }
  double k_max() const { return k_max_; }
  std::size_t size() const { return n_; }
  double spacing() const { return dk_; }
  double operator[](std::size_t i) const { return k_min_ + static_cast<double>(i) * dk_; }
  RVector points() const;

  bool operator==(const MomentumGrid&) const = default;

 private:
  double k_min_;
  double k_max_;
  std::size_t n_;
  double dk_;
};

MomentumGrid build_grid(double k_min, double k_max, std::size_t n);

struct GaussianPacketSpec {
  double k0 = 0.0;
  double sigma_k = 1.0;
  double x0 = 0.0;

  void validate() const;
  bool operator==(const GaussianPacketSpec&) const = default;
};

/// F(k) = (2 pi sigma_k^2)^(-1/4) exp(-(k-k0)^2 / (4 sigma_k^2)) exp(-i k x0).
cplx gaussian_amplitude(const GaussianPacketSpec& spec, double k);

/// Closed-form position-space packet psi0(x) = (2 pi)^(-1/2) \int F(k) e^{ikx} dk.
cplx gaussian_position_amplitude(const GaussianPacketSpec& spec, double x);

struct SpectralState {
  MomentumGrid grid;
  CVector values;
  double t = 0.0;

  SpectralState(MomentumGrid g, CVector v, double time);
};

SpectralState gaussian_profile(const GaussianPacketSpec& spec, const MomentumGrid& grid);

/// Trapezoidal \int |C(k)|^2 dk over the grid.
double norm(const SpectralState& state);

/// Trapezoidal rule on uniformly spaced samples.
double trapezoid(const RVector& samples, double spacing);

/// |C|^2 pointwise.
RVector density(const SpectralState& state);

/// Trapezoidal <a, b> = \int conj(a) b dk on a common spacing.
cplx overlap(const CVector& a, const CVector& b, double spacing);

/// candidate * e^{-i theta} with theta chosen to maximise |<reference, candidate e^{-i theta}>|
/// real-positive; overall phase is unobservable so comparisons use this.
CVector align_global_phase(const CVector& reference, const CVector& candidate);

/// max_i |a_i - b_i|
double max_abs_difference(const CVector& a, const CVector& b);

}  // namespace drivenq
