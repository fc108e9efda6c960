#include <benchmark/benchmark.h>

#include "overpart/biject.hpp"
#include "overpart/parallel.hpp"
#include "overpart/pbar.hpp"
#include "overpart/roots.hpp"
#include "overpart/verify.hpp"

using namespace overpart;

namespace {

const Rational kWidth(1, 10000);

std::vector<AuditCell> audit_cells() {
    std::vector<AuditCell> cells;
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= a; ++b)
            cells.push_back({"f", a, b, 1});
    for (int a = 2; a <= 6; ++a)
        cells.push_back({"gk", a, 0, 3});
    return cells;
}

// Memos are process-wide; warm them so both variants time the same work.
void warm() {
    pbar_poly_prefix(64);
    pbar_prefix(200);
}

void BM_roots_serial(benchmark::State& state) {
    warm();
    for (auto _ : state)
        benchmark::DoNotOptimize(roots_table_serial(state.range(0), state.range(0), kWidth));
}

void BM_roots_parallel(benchmark::State& state) {
    warm();
    for (auto _ : state)
        benchmark::DoNotOptimize(roots_table(state.range(0), state.range(0), kWidth));
}

void BM_th4_serial(benchmark::State& state) {
    warm();
    const std::vector<Rational> xs{1, Rational(3, 2), 2, Rational(5, 2), 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_th4_grid_serial(state.range(0), xs));
}

void BM_th4_parallel(benchmark::State& state) {
    warm();
    const std::vector<Rational> xs{1, Rational(3, 2), 2, Rational(5, 2), 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_th4_grid(state.range(0), xs));
}

void BM_ie8_serial(benchmark::State& state) {
    warm();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_ie8_serial(state.range(0)));
}

void BM_ie8_parallel(benchmark::State& state) {
    warm();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_ie8(state.range(0)));
}

void BM_audits_serial(benchmark::State& state) {
    const auto cells = audit_cells();
    for (auto _ : state)
        benchmark::DoNotOptimize(audit_many_serial(cells));
}

void BM_audits_parallel(benchmark::State& state) {
    const auto cells = audit_cells();
    for (auto _ : state)
        benchmark::DoNotOptimize(audit_many(cells));
}

}  // namespace

BENCHMARK(BM_roots_serial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_roots_parallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_th4_serial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_th4_parallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ie8_serial)->Arg(93)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ie8_parallel)->Arg(93)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audits_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audits_parallel)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
    apply_worker_env();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv))
        return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
