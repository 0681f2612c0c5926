#include <benchmark/benchmark.h>

#include "mfm/quadrature.hpp"

namespace {

using mfm::Complex;

const mfm::ParameterSet& params(int m) {
    static const mfm::ParameterSet p1 = mfm::random_generic(1, 7, 0.05);
    static const mfm::ParameterSet p2 = mfm::random_generic(2, 7, 0.05);
    static const mfm::ParameterSet p4 = mfm::random_generic(4, 7, 0.05);
    switch (m) {
        case 1: return p1;
        case 2: return p2;
        default: return p4;
    }
}

void BM_LogGamma(benchmark::State& state) {
    Complex z(0.7, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mfm::log_gamma(z));
        z += Complex(1e-12, 0.0);
    }
}
BENCHMARK(BM_LogGamma);

void BM_Ghf(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const mfm::SeriesParameters sp = mfm::solution_parameters(0, params(m));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mfm::ghf(sp, Complex(0.2, 0.0)));
    }
}
BENCHMARK(BM_Ghf)->Arg(1)->Arg(2)->Arg(4);

void BM_CohomologyMatrix(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            mfm::cohomology_matrix(params(m), mfm::MatrixKind::cohomology_mixed));
    }
}
BENCHMARK(BM_CohomologyMatrix)->Arg(2)->Arg(4);

void BM_TprResidual(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mfm::tpr_residual_00(params(m), 0.05));
    }
}
BENCHMARK(BM_TprResidual)->Arg(1)->Arg(2)->Arg(4);

void BM_CubeIntegral(benchmark::State& state) {
    mfm::CubeIntegrand f;
    f.m = 2;
    f.axes = {{Complex(-0.5, 0.0), Complex(-0.3, 0.0)},
              {Complex(-0.4, 0.1), Complex(-0.2, 0.0)}};
    f.coupling = mfm::Coupling{0.25, Complex(-0.4, 0.1)};
    const auto level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mfm::cube_integral(f, level));
    }
}
BENCHMARK(BM_CubeIntegral)->Arg(4)->Arg(5)->Arg(6);

} // namespace

BENCHMARK_MAIN();
