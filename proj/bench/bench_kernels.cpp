// Serial reference against the OpenMP kernels.  Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "prefixpoly/lattice.hpp"
#include "prefixpoly/parking.hpp"
#include "prefixpoly/posets.hpp"
#include "prefixpoly/probability.hpp"

using namespace prefixpoly;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_count_points_brute(benchmark::State& st) {
    const IntVector x{3, 3, 3, 3, 3};
    for (auto _ : st) benchmark::DoNotOptimize(count_points_brute(x, exec_of(st)));
}

void BM_count_points_nm(benchmark::State& st) {
    const IntVector x{2, 2, 2};
    for (auto _ : st) benchmark::DoNotOptimize(count_points_nm(x, 2, exec_of(st)));
}

void BM_count_x_parking(benchmark::State& st) {
    const IntVector x{2, 1, 2, 1, 1};
    for (auto _ : st) benchmark::DoNotOptimize(count_x_parking(x, exec_of(st)));
}

void BM_section_oracle(benchmark::State& st) {
    const auto p = q_poset(4);
    const auto c = q_chain(4);
    const IntVector x{2, 2, 2, 2};
    for (auto _ : st) benchmark::DoNotOptimize(section_count_oracle(p, c, x, exec_of(st)));
}

void BM_two_sided_count(benchmark::State& st) {
    const IntVector z{1, 2, 1, 0}, x{3, 3, 3, 3};
    for (auto _ : st) benchmark::DoNotOptimize(two_sided_count(z, x, exec_of(st)));
}

void BM_mc_band(benchmark::State& st) {
    std::vector<Rational> r(6), s(6, Rational(1));
    for (unsigned j = 1; j <= 6; ++j) r[j - 1] = make_rational(3 * j, 60);
    for (auto _ : st) benchmark::DoNotOptimize(mc_band(r, s, 200'000, 42, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_count_points_brute)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_points_nm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_x_parking)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_section_oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_two_sided_count)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mc_band)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
