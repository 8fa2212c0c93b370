#include <cstdint>

#include "drivenq/kernels.hpp"
#include "trace_point.hpp"

namespace drivenq::kernels {

void serial::trace_characteristics(const AdvectionProblem& problem, std::span<const double> k_end, double t,
                                   std::size_t steps, std::span<double> foot, std::span<cplx> exponent) {
  for (std::size_t i = 0; i < k_end.size(); ++i) {
    const auto r = detail::trace_point(problem, k_end[i], t, steps);
    foot[i] = r.foot;
    exponent[i] = r.exponent;
  }
}

void omp::trace_characteristics(const AdvectionProblem& problem, std::span<const double> k_end, double t,
                                std::size_t steps, std::span<double> foot, std::span<cplx> exponent) {
  const auto n = static_cast<std::int64_t>(k_end.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto r = detail::trace_point(problem, k_end[i], t, steps);
    foot[i] = r.foot;
    exponent[i] = r.exponent;
  }
}

}  // namespace drivenq::kernels
