#include <benchmark/benchmark.h>

#include <random>

#include "logsym/complex_verifier.hpp"
#include "logsym/deformation.hpp"
#include "logsym/logform.hpp"
#include "logsym/residue_analyzer.hpp"
#include "logsym/skew_matrix.hpp"

namespace {

logsym::SkewMatrix random_skew(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    logsym::RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            m(r, c) = logsym::Rational(num(rng), den(rng));
            m(r, c).canonicalize();
            m(c, r) = -m(r, c);
        }
    return logsym::complete_skew(m);
}

logsym::Model random_model(std::size_t n, unsigned seed) {
    for (;; ++seed) {
        auto b = random_skew(n, seed);
        if (logsym::pfaffian(b) != 0) return logsym::Model::create(b, n);
    }
}

void BM_Pfaffian(benchmark::State& state) {
    const auto b = random_skew(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(logsym::pfaffian(b));
}
BENCHMARK(BM_Pfaffian)->DenseRange(4, 16, 4);

void BM_ExteriorDerivative(benchmark::State& state) {
    const auto m = random_model(static_cast<std::size_t>(state.range(0)), 2);
    const auto form = logsym::candidate_form(m, 0, 1, logsym::ExponentVector::zero(m.dim()));
    for (auto _ : state) benchmark::DoNotOptimize(logsym::exterior_derivative(form));
}
BENCHMARK(BM_ExteriorDerivative)->DenseRange(4, 10, 2);

void BM_ClassifyPairs(benchmark::State& state) {
    const auto m = random_model(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(logsym::classify_all_pairs(m));
}
BENCHMARK(BM_ClassifyPairs)->DenseRange(4, 12, 4);

void BM_DeformationSearch(benchmark::State& state) {
    const auto m = random_model(6, 4);
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(logsym::search(m, degree));
}
BENCHMARK(BM_DeformationSearch)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_NormalLogHomology(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(logsym::normal_log_homology({n, 2, -1}, n));
}
BENCHMARK(BM_NormalLogHomology)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_ConeIdentity(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(logsym::verify_cone_identity(n, 2));
}
BENCHMARK(BM_ConeIdentity)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
