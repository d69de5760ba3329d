#include <benchmark/benchmark.h>

#include "heisfree/cartan.hpp"
#include "heisfree/freeness.hpp"

using namespace heisfree;

namespace {

ExactComplex ec(long re_num, long re_den, long im_num, long im_den) {
    return ExactComplex(ExactScalar(make_rational(re_num, re_den)),
                        ExactScalar(make_rational(im_num, im_den)));
}

void BM_ExactMatrixMul(benchmark::State& state) {
    const auto pair = generator_pair(ec(-1, 2, -1, 2));
    const Matrix3<ExactComplex> ab = pair.a * pair.b;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ab * pair.a);
    }
}
BENCHMARK(BM_ExactMatrixMul);

void BM_QuatMatrixMul(benchmark::State& state) {
    const auto pair = generator_pair(Quaternion{-0.5, 0.25, 0.25, 0.1});
    const Matrix3<Quaternion> ab = pair.a * pair.b;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ab * pair.a);
    }
}
BENCHMARK(BM_QuatMatrixMul);

void BM_HeisMul(benchmark::State& state) {
    const HeisPoint<ExactComplex> p{ec(1, 3, -2, 5), ExactScalar(make_rational(7, 2))};
    const HeisPoint<ExactComplex> q{ec(-4, 7, 1, 2), ExactScalar(make_rational(-1, 3))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(heis_mul(p, q));
    }
}
BENCHMARK(BM_HeisMul);

void BM_DecomposeGenerators(benchmark::State& state) {
    const ExactComplex mu = ec(-1, 2, -1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_generators(mu));
    }
}
BENCHMARK(BM_DecomposeGenerators);

void BM_WordSearch(benchmark::State& state) {
    // certified-free parameter: the search scans the whole tree
    const auto pair = generator_pair(ExactComplex(-1));
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(identity_word_search(pair, depth));
    }
}
BENCHMARK(BM_WordSearch)->Arg(4)->Arg(6);

void BM_WordSearchParallel(benchmark::State& state) {
    const auto pair = generator_pair(ExactComplex(-1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(identity_word_search(pair, 6, 4));
    }
}
BENCHMARK(BM_WordSearchParallel);

void BM_CartanInvariant(benchmark::State& state) {
    const BoundaryTriple t(origin_lift<ExactComplex>(), infinity_lift<ExactComplex>(),
                           standard_lift(ExactComplex(-1), ExactScalar(make_rational(5, 3))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cartan_invariant(t));
    }
}
BENCHMARK(BM_CartanInvariant);

}  // namespace

BENCHMARK_MAIN();
