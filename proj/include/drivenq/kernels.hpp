#pragma once

// Data-parallel inner loops. Every kernel has a plain serial reference in
// `serial::` and an OpenMP version in `omp::`; both produce bitwise-identical
// results because each output element is computed independently.

#include <cstddef>
#include <span>

#include "drivenq/characteristics.hpp"
#include "drivenq/core.hpp"

namespace drivenq::kernels {

namespace serial {
/// Backward RK4 trace of each end point in k_end from time t to 0.
/// foot[i] = k(0), exponent[i] = int_0^t beta(k(s), s) ds.
void trace_characteristics(const AdvectionProblem& problem, std::span<const double> k_end, double t,
                           std::size_t steps, std::span<double> foot, std::span<cplx> exponent);

/// First derivative: sixth-order centred in the interior, lower-order closures
/// (one-sided at the end point) on the three points nearest each end. Needs at
/// least 7 samples.
void fd6_derivative(std::span<const cplx> in, double h, std::span<cplx> out);

/// out[i] = dx / sqrt(2 pi) sum_j psi[j] exp(-i k[i] (x_min + j dx))
void position_to_momentum(std::span<const cplx> psi, double x_min, double dx, std::span<const double> k,
                          std::span<cplx> out);
}  // namespace serial

namespace omp {
void trace_characteristics(const AdvectionProblem& problem, std::span<const double> k_end, double t,
                           std::size_t steps, std::span<double> foot, std::span<cplx> exponent);
void fd6_derivative(std::span<const cplx> in, double h, std::span<cplx> out);
void position_to_momentum(std::span<const cplx> psi, double x_min, double dx, std::span<const double> k,
                          std::span<cplx> out);
}  // namespace omp

}  // namespace drivenq::kernels
