#include <cmath>

#include <benchmark/benchmark.h>

#include <qdunkl/dunkl.hpp>
#include <qdunkl/experiments.hpp>
#include <qdunkl/moduli.hpp>
#include <qdunkl/operators.hpp>
#include <qdunkl/qcore.hpp>
#include <qdunkl/test_function.hpp>

using namespace qdunkl;

namespace
{

void BM_q_bracket(benchmark::State &state)
{
    double x = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_bracket(x, 0.9));
        x += 0.001;
    }
}
BENCHMARK(BM_q_bracket);

// Building a gamma table of the given capacity.
void BM_gamma_table(benchmark::State &state)
{
    const QContext ctx(0.9, 1);
    const auto capacity = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        GammaTable t(ctx, capacity);
        benchmark::DoNotOptimize(t.log_gamma(capacity));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_gamma_table)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

// Operator weights at x = 0.8 of the domain limit, for growing n at q = q_n.
void BM_weights(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const StancuParams p(QContext(QnScheme::one_minus_inv().q(n), 1), n, 1, 2);
    const double x = 0.8 * p.domain_limit();
    for (auto _ : state) {
        const WeightVector w = weights(x, p);
        benchmark::DoNotOptimize(w.w.data());
    }
}
BENCHMARK(BM_weights)->Arg(10)->Arg(50)->Arg(200);

void BM_eval_T(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const StancuParams p(QContext(QnScheme::one_minus_inv().q(n), 1), n, 1, 2);
    const KantorovichOperator op(p);
    const TestFunction f = TestFunction::exp_decay(1);
    const double x = 0.5 * p.domain_limit();
    for (auto _ : state) {
        benchmark::DoNotOptimize(op.apply(f, x));
    }
}
BENCHMARK(BM_eval_T)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_modulus(benchmark::State &state)
{
    const DomainGrid g(4, static_cast<std::size_t>(state.range(0)));
    const TestFunction f = TestFunction::sine();
    for (auto _ : state) {
        benchmark::DoNotOptimize(modulus(f, 0.3, g));
    }
}
BENCHMARK(BM_modulus)->Arg(201)->Arg(2001)->Unit(benchmark::kMicrosecond);

void BM_korovkin(benchmark::State &state)
{
    ExperimentConfig cfg;
    cfg.n_list = {10, 50};
    for (auto _ : state) {
        benchmark::DoNotOptimize(korovkin_run(cfg).rows.size());
    }
}
BENCHMARK(BM_korovkin)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
