// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to compare scaling.

#include <benchmark/benchmark.h>

#include <cmath>

#include "drivenq/com_schemes.hpp"
#include "drivenq/kernels.hpp"

using namespace drivenq;

namespace {

const GaussianPacketSpec kPacket{};

AdvectionProblem s3_problem() {
  return scheme_problem(SchemeId::S3, PhysicalParams{}, [](double k) { return gaussian_amplitude(kPacket, k); });
}

template <bool Parallel>
void BM_TraceCharacteristics(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AdvectionProblem problem = s3_problem();
  const RVector k = MomentumGrid(-40.0, 40.0, n).points();
  RVector foot(n);
  CVector exponent(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::trace_characteristics(problem, k, 2.0, 400, foot, exponent);
    else
      kernels::serial::trace_characteristics(problem, k, 2.0, 400, foot, exponent);
    benchmark::DoNotOptimize(foot.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <bool Parallel>
void BM_Fd6Derivative(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MomentumGrid g(-20.0, 20.0, n);
  CVector in(n), out(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = std::polar(std::exp(-g[i] * g[i] / 4.0), g[i]);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::fd6_derivative(in, g.spacing(), out);
    else
      kernels::serial::fd6_derivative(in, g.spacing(), out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <bool Parallel>
void BM_PositionToMomentum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CVector psi(n);
  for (std::size_t j = 0; j < n; ++j) psi[j] = gaussian_position_amplitude(kPacket, -30.0 + 60.0 * j / n);
  const RVector k = MomentumGrid(-10.0, 10.0, n).points();
  CVector out(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::position_to_momentum(psi, -30.0, 60.0 / n, k, out);
    else
      kernels::serial::position_to_momentum(psi, -30.0, 60.0 / n, k, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n));
}

}  // namespace

BENCHMARK(BM_TraceCharacteristics<false>)->Name("trace/serial")->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceCharacteristics<true>)->Name("trace/omp")->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fd6Derivative<false>)->Name("fd6/serial")->Arg(4096)->Arg(1 << 16);
BENCHMARK(BM_Fd6Derivative<true>)->Name("fd6/omp")->Arg(4096)->Arg(1 << 16);
BENCHMARK(BM_PositionToMomentum<false>)->Name("dft/serial")->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PositionToMomentum<true>)->Name("dft/omp")->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
