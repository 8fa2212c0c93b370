#include "drivenq/spectral.hpp"

#include <fftw3.h>

#include <mutex>

namespace drivenq {
namespace {
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace

struct FourierTransform::Plan {
  std::size_t n;
  fftw_complex* buffer;
  fftw_plan fwd;
  fftw_plan bwd;

  explicit Plan(std::size_t size) : n(size) {
    std::lock_guard lock(planner_mutex());
    buffer = fftw_alloc_complex(n);
    const int len = static_cast<int>(n);
    fwd = fftw_plan_dft_1d(len, buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    bwd = fftw_plan_dft_1d(len, buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buffer);
  }

  void run(fftw_plan p, CVector& data) const {
    if (data.size() != n) throw InvalidArgument("FFT length mismatch");
    // new-array execute keeps concurrent use of one plan safe
    auto* io = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, io, io);
  }
};

FourierTransform::FourierTransform(std::size_t n) {
  if (n == 0) throw InvalidArgument("FFT length must be positive");
  plan_ = std::make_unique<Plan>(n);
}
FourierTransform::~FourierTransform() = default;
FourierTransform::FourierTransform(FourierTransform&&) noexcept = default;
FourierTransform& FourierTransform::operator=(FourierTransform&&) noexcept = default;

std::size_t FourierTransform::size() const { return plan_->n; }
void FourierTransform::forward(CVector& data) const { plan_->run(plan_->fwd, data); }
void FourierTransform::backward(CVector& data) const { plan_->run(plan_->bwd, data); }

RVector fft_frequencies(std::size_t n, double spacing) {
  RVector freq(n);
  const double base = 2.0 * kPi / (static_cast<double>(n) * spacing);
  for (std::size_t j = 0; j < n; ++j) {
    const auto signed_j = (j <= (n - 1) / 2) ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n);
    freq[j] = base * signed_j;
  }
  return freq;
}

CVector spectral_derivative(const CVector& values, double spacing) {
  const std::size_t n = values.size();
  FourierTransform fft(n);
  CVector work = values;
  fft.forward(work);
  const RVector freq = fft_frequencies(n, spacing);
  for (std::size_t j = 0; j < n; ++j) work[j] *= kI * freq[j];
  if (n % 2 == 0) work[n / 2] = 0.0;
  fft.backward(work);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : work) v *= scale;
  return work;
}

}  // namespace drivenq
