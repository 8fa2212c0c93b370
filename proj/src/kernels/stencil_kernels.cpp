#include <cstdint>

#include "drivenq/kernels.hpp"

namespace drivenq::kernels {
namespace {

constexpr double kCentral[7] = {-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0};
// rows: derivative at offset 0, 1, 2 from the left end, stencil on points 0..6.
// Row 0 is second-order one-sided; rows 1 and 2 are centred (orders 2 and 4).
constexpr double kClosure[3][7] = {
    {-90.0, 120.0, -30.0, 0.0, 0.0, 0.0, 0.0},
    {-30.0, 0.0, 30.0, 0.0, 0.0, 0.0, 0.0},
    {5.0, -40.0, 0.0, 40.0, -5.0, 0.0, 0.0},
};

inline cplx derivative_at(std::span<const cplx> f, std::size_t i, double inv60h) {
  const std::size_t n = f.size();
  cplx acc{};
  if (i >= 3 && i + 3 < n) {
    for (int j = 0; j < 7; ++j) acc += kCentral[j] * f[i + j - 3];
  } else if (i < 3) {
    for (int j = 0; j < 7; ++j) acc += kClosure[i][j] * f[j];
  } else {
    // mirror of the left closure: d/dk flips sign under reversal
    const std::size_t r = n - 1 - i;
    for (int j = 0; j < 7; ++j) acc -= kClosure[r][j] * f[n - 1 - j];
  }
  return acc * inv60h;
}

void check(std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() < 7) throw InvalidArgument("fd6_derivative needs at least 7 samples");
  if (out.size() != in.size()) throw InvalidArgument("fd6_derivative output size mismatch");
}

}  // namespace

void serial::fd6_derivative(std::span<const cplx> in, double h, std::span<cplx> out) {
  check(in, out);
  const double inv = 1.0 / (60.0 * h);
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = derivative_at(in, i, inv);
}

void omp::fd6_derivative(std::span<const cplx> in, double h, std::span<cplx> out) {
  check(in, out);
  const double inv = 1.0 / (60.0 * h);
  const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = derivative_at(in, static_cast<std::size_t>(i), inv);
}

}  // namespace drivenq::kernels
