// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "casino/craps.hpp"
#include "casino/leigh.hpp"
#include "casino/tcp.hpp"

using namespace casino;

namespace {

void BM_LeighSerial(benchmark::State& state) {
  const leigh::SessionConfig config;
  for (auto _ : state) {
    auto agg = leigh::run_experiment_serial(1, static_cast<std::uint64_t>(state.range(0)), config);
    benchmark::DoNotOptimize(agg.n_winning.sum);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LeighParallel(benchmark::State& state) {
  const leigh::SessionConfig config;
  for (auto _ : state) {
    auto agg = leigh::run_experiment(1, static_cast<std::uint64_t>(state.range(0)), config,
                                     static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(agg.n_winning.sum);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TcpSerial(benchmark::State& state) {
  for (auto _ : state) {
    auto a = tcp::tcp_exact_serial(tcp::TcpStrategy::optimal());
    benchmark::DoNotOptimize(a.ante_play_profit);
  }
}

void BM_TcpParallel(benchmark::State& state) {
  for (auto _ : state) {
    auto a = tcp::tcp_exact(tcp::TcpStrategy::optimal(), static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(a.ante_play_profit);
  }
}

void BM_CrapsSerial(benchmark::State& state) {
  for (auto _ : state) {
    auto s = craps::simulate_decisions_serial(1, static_cast<std::uint64_t>(state.range(0)),
                                              craps::Odds::three_four_five);
    benchmark::DoNotOptimize(s.profit.sum);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CrapsParallel(benchmark::State& state) {
  for (auto _ : state) {
    auto s = craps::simulate_decisions(1, static_cast<std::uint64_t>(state.range(0)),
                                       craps::Odds::three_four_five, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(s.profit.sum);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// 1 worker and every available core, without duplicates on a single core.
std::vector<std::int64_t> worker_counts() {
  std::vector<std::int64_t> w = {1};
  if (omp_get_max_threads() > 1) w.push_back(omp_get_max_threads());
  return w;
}

}  // namespace

BENCHMARK(BM_LeighSerial)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LeighParallel)->ArgsProduct({{2048}, worker_counts()})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TcpSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TcpParallel)->ArgsProduct({worker_counts()})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrapsSerial)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrapsParallel)->ArgsProduct({{1 << 22}, worker_counts()})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
