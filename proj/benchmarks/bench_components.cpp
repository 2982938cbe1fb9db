#include <benchmark/benchmark.h>

#include <gaugecoho/presentations.hpp>
#include <gaugecoho/random.hpp>
#include <gaugecoho/suspension.hpp>
#include <gaugecoho/zlinalg.hpp>

using namespace gaugecoho;

namespace
{

Ring ring_of(int64_t code)
{
    return code == 0 ? Ring::integers() : code == 1 ? Ring::rationals() : Ring::prime_field(static_cast<std::uint64_t>(code));
}

// args: n, weight, ring code (0 = Z, 1 = Q, p = F_p)
void BM_gauge_component(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto w = static_cast<unsigned>(state.range(1));
    const auto spec = PresentationSpec::gauge(n, 1, w);
    const auto ring = ring_of(state.range(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_degree_component(spec, w, ring));
    }
}
BENCHMARK(BM_gauge_component)
    ->Args({2, 8, 1})
    ->Args({2, 8, 0})
    ->Args({2, 10, 0})
    ->Args({3, 8, 0})
    ->Args({3, 9, 0})
    ->Args({3, 10, 1})
    ->Args({3, 10, 2})
    ->Args({3, 10, 0})
    ->Unit(benchmark::kMillisecond);

void BM_bott_component(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto w = static_cast<unsigned>(state.range(1));
    const auto spec = PresentationSpec::bott(n, w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_degree_component(spec, w, Ring::integers()));
    }
}
BENCHMARK(BM_bott_component)->Args({2, 12})->Args({4, 12})->Unit(benchmark::kMillisecond);

void BM_poincare_series(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto cap = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(poincare_series(PresentationSpec::gauge(n, 1, cap), cap, Ring::rationals()));
    }
}
BENCHMARK(BM_poincare_series)->Args({2, 10})->Args({3, 10})->Unit(benchmark::kMillisecond);

void BM_smith_normal_form(benchmark::State &state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    SeededRng rng(default_seed);
    const auto M = random_matrix(rng, size, size + 3, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(M));
    }
}
BENCHMARK(BM_smith_normal_form)->Arg(8)->Arg(16)->Arg(24);

void BM_hermite_normal_form(benchmark::State &state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    SeededRng rng(default_seed);
    const auto M = random_matrix(rng, size + 3, size, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermite_normal_form(M, false));
    }
}
BENCHMARK(BM_hermite_normal_form)->Arg(8)->Arg(16)->Arg(24);

void BM_suspension_images(benchmark::State &state)
{
    const auto top = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        const SuspensionOperator op(3, top);
        for (unsigned i = 1; i <= top; ++i) {
            benchmark::DoNotOptimize(op.generator_image(i));
        }
    }
}
BENCHMARK(BM_suspension_images)->Arg(8)->Arg(12);

void BM_normal_form(benchmark::State &state)
{
    const Presentation pres(PresentationSpec::gauge(2, 1, 8));
    SeededRng rng(default_seed);
    const auto p = random_homogeneous(rng, pres.spec().context(), 8, 20, 9, {Family::c, Family::x});
    pres.component(8, Ring::integers());
    for (auto _ : state) {
        benchmark::DoNotOptimize(pres.normal_form(p, Ring::integers()));
    }
}
BENCHMARK(BM_normal_form);

} // namespace

BENCHMARK_MAIN();
