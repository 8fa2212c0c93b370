#pragma once

// FFT helpers shared by the split-step propagator, the moment calculation
// and the generator check. Backed by FFTW; plans are created under a lock.

#include <cstddef>
#include <memory>

#include "drivenq/core.hpp"

namespace drivenq {

/// In-place unnormalised complex DFT of a fixed length.
class FourierTransform {
 public:
  explicit FourierTransform(std::size_t n);
  ~FourierTransform();
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;
  FourierTransform(FourierTransform&&) noexcept;
  FourierTransform& operator=(FourierTransform&&) noexcept;

  std::size_t size() const;
  /// out_j = sum_l in_l exp(-2 pi i j l / n)
  void forward(CVector& data) const;
  /// out_l = sum_j in_j exp(+2 pi i j l / n)
  void backward(CVector& data) const;

 private:
  struct Plan;
  std::unique_ptr<Plan> plan_;
};

/// Angular frequencies 2 pi j / (n h) in FFT order, Nyquist mode included as negative.
RVector fft_frequencies(std::size_t n, double spacing);

/// d/dk of uniformly sampled data treated as periodic; the Nyquist mode is dropped.
CVector spectral_derivative(const CVector& values, double spacing);

}  // namespace drivenq
