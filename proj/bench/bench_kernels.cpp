// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include <random>
#include <stdexcept>

#include "prohecke/hecke.hpp"
#include "prohecke/linalg.hpp"

using namespace prohecke;

namespace {

ExactMatrix random_matrix(const Field& k, size_t rows, size_t cols, uint64_t seed) {
    std::mt19937_64 rng(seed);
    ExactMatrix m(k, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(k, static_cast<int64_t>(rng() % 7) - 3);
    return m;
}

Field field_of(int64_t code) { return code == 0 ? Field::rationals() : Field::prime(static_cast<uint32_t>(code)); }

void elimination(benchmark::State& state, Exec exec) {
    const Field k = field_of(state.range(0));
    const size_t n = static_cast<size_t>(state.range(1));
    const ExactMatrix m = random_matrix(k, n, n, 7);
    const Echelon reference = reduced_echelon(m, Exec::Serial);
    for (auto _ : state) {
        Echelon e = reduced_echelon(m, exec);
        benchmark::DoNotOptimize(e.pivots.data());
        if (e.pivots != reference.pivots || !(e.reduced == reference.reduced))
            state.SkipWithError("serial and parallel echelon forms differ");
    }
    state.SetLabel(k.name());
}

void oracle(benchmark::State& state, Exec exec) {
    const uint32_t q = static_cast<uint32_t>(state.range(0));
    const auto w = ExtendedWeylElt::translation(q, {0, 2}) * ExtendedWeylElt::simple(2, q, 1);
    const auto w2 = ExtendedWeylElt::translation(q, {0, 1});
    const Field k = Field::rationals();
    const HeckeElt reference = convolve_oracle(w, w2, k, Exec::Serial);
    for (auto _ : state) {
        HeckeElt r = convolve_oracle(w, w2, k, exec);
        if (r != reference) state.SkipWithError("serial and parallel oracle differ");
    }
}

}  // namespace

BENCHMARK_CAPTURE(elimination, serial, Exec::Serial)->ArgsProduct({{3, 0}, {40, 80}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(elimination, omp, Exec::Parallel)->ArgsProduct({{3, 0}, {40, 80}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, serial, Exec::Serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, omp, Exec::Parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
