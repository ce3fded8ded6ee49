#include <random>

#include <benchmark/benchmark.h>

#include "cdgacalc/exact/linalg.hpp"
#include "cdgacalc/scenarios/scenarios.hpp"

namespace {

using cdgacalc::exact::ExactMatrix;
using cdgacalc::exact::FieldSpec;
using cdgacalc::exact::Scalar;

ExactMatrix random_matrix(FieldSpec field, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    ExactMatrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = Scalar::from_int(field, entry(rng));
    return m;
}

template <bool Parallel>
void rref_prime(benchmark::State& state)
{
    const auto m = random_matrix(FieldSpec::prime(32003), static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        auto r = Parallel ? cdgacalc::exact::rref(m) : cdgacalc::exact::reference::rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}

template <bool Parallel>
void rref_rational(benchmark::State& state)
{
    const auto m = random_matrix(FieldSpec::rationals(), static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) {
        auto r = Parallel ? cdgacalc::exact::rref(m) : cdgacalc::exact::reference::rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}

void preset_im_emb(benchmark::State& state)
{
    cdgacalc::scenarios::RunOptions opts;
    opts.max_degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = cdgacalc::scenarios::run_preset("im_emb_model", opts);
        benchmark::DoNotOptimize(v.rows.size());
    }
}

}  // namespace

BENCHMARK(rref_prime<false>)->Name("rref/Fp/serial")->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(rref_prime<true>)->Name("rref/Fp/openmp")->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(rref_rational<false>)->Name("rref/Q/serial")->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(rref_rational<true>)->Name("rref/Q/openmp")->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(preset_im_emb)->Name("preset/im_emb_model")->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
