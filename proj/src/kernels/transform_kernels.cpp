#include <cmath>
#include <cstdint>

#include "drivenq/kernels.hpp"

namespace drivenq::kernels {
namespace {

inline cplx momentum_sample(std::span<const cplx> psi, double x_min, double dx, double k) {
  cplx acc{};
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double x = x_min + static_cast<double>(j) * dx;
    acc += psi[j] * std::polar(1.0, -k * x);
  }
  return acc * (dx / std::sqrt(2.0 * kPi));
}

}  // namespace

void serial::position_to_momentum(std::span<const cplx> psi, double x_min, double dx, std::span<const double> k,
                                  std::span<cplx> out) {
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = momentum_sample(psi, x_min, dx, k[i]);
}

void omp::position_to_momentum(std::span<const cplx> psi, double x_min, double dx, std::span<const double> k,
                               std::span<cplx> out) {
  const auto n = static_cast<std::int64_t>(k.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = momentum_sample(psi, x_min, dx, k[i]);
}

}  // namespace drivenq::kernels
