#include <benchmark/benchmark.h>

#include "lanfa/bounds.hpp"
#include "lanfa/linear_systems.hpp"

using namespace lanfa;

namespace {

SymmetricOperator bench_operator(Index n) {
    Matrix m(n, n);
    std::uint64_t ctr = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j <= i; ++j) {
            const double v = rng::gaussian(1234, ctr++);
            m(i, j) = v;
            m(j, i) = v;
        }
    return SymmetricOperator::dense(std::move(m));
}

void BM_Lanczos(benchmark::State& state) {
    const Index n = state.range(0);
    const SymmetricOperator a = bench_operator(n);
    const Vector b = rng::gaussian_vector(7, n).normalized();
    for (auto _ : state)
        benchmark::DoNotOptimize(lanczos(a, b, std::min<Index>(60, n)));
}
BENCHMARK(BM_Lanczos)->Arg(200)->Arg(500)->Arg(1000);

void BM_TridiagEigvals(benchmark::State& state) {
    const Index k = state.range(0);
    Vector alphas(k), betas(k - 1);
    for (Index i = 0; i < k; ++i)
        alphas[i] = rng::gaussian(2, static_cast<std::uint64_t>(i));
    for (Index i = 0; i + 1 < k; ++i)
        betas[i] = std::abs(rng::gaussian(3, static_cast<std::uint64_t>(i))) + 0.1;
    const Tridiagonal t{alphas, betas};
    for (auto _ : state)
        benchmark::DoNotOptimize(tridiag_eigvals(t));
}
BENCHMARK(BM_TridiagEigvals)->Arg(60)->Arg(200);

void BM_DetRatio(benchmark::State& state) {
    const Index k = state.range(0);
    Vector alphas(k), betas(k - 1);
    for (Index i = 0; i < k; ++i)
        alphas[i] = rng::gaussian(4, static_cast<std::uint64_t>(i));
    for (Index i = 0; i + 1 < k; ++i)
        betas[i] = std::abs(rng::gaussian(5, static_cast<std::uint64_t>(i))) + 0.1;
    const Tridiagonal t{alphas, betas};
    const Vector ritz = tridiag_eigvals(t);
    const Complex z(0.3, 2.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(det_ratio(t, 0.0, z, ritz));
}
BENCHMARK(BM_DetRatio)->Arg(60)->Arg(200);

void BM_IntegralTermAposteriori(benchmark::State& state) {
    const Index k = state.range(0);
    const SymmetricOperator a = gen_uniform(400, 1e-2, 1e2);
    const Vector b = gen_rhs(RhsPolicy::EqualEigenprojection, 0, a);
    const LanczosFactorization fact = lanczos(a, b, k);
    const Vector ritz = tridiag_eigvals(fact.t);
    const Contour pac = make_pacman(0.0, pacman_r_floor(1e-2, 1e2),
                                    std::numeric_limits<double>::infinity());
    const SpectrumSets sets =
        SpectrumSets::aposteriori(RealSet::interval(1e-2, 1e2), ritz);
    for (auto _ : state)
        benchmark::DoNotOptimize(integral_term(ScalarFunction::sqrt(), pac, 0.0, sets));
}
BENCHMARK(BM_IntegralTermAposteriori)->Arg(10)->Arg(30)->Arg(60);

void BM_MinresNorms(benchmark::State& state) {
    const SymmetricOperator a = bench_operator(300);
    const Vector b = rng::gaussian_vector(8, 300).normalized();
    const LanczosFactorization fact = lanczos(a, b, 60);
    for (auto _ : state)
        benchmark::DoNotOptimize(minres_residual_norms(fact, 0.1));
}
BENCHMARK(BM_MinresNorms);

} // namespace

BENCHMARK_MAIN();
