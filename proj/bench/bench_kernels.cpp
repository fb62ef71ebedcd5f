// Parallel kernels against their serial references.
//
//   ./build/bench/qmono_bench --benchmark_filter=Frontier

#include <random>

#include <benchmark/benchmark.h>

#include "qmono/kernels.hpp"
#include "qmono/loops.hpp"
#include "qmono/orbits.hpp"

namespace {

using namespace qmono;

std::vector<LatticePoint> random_frontier(std::size_t size) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> coord(-1'000'000, 1'000'000);
  std::vector<LatticePoint> pts(size);
  for (auto& x : pts) x = {coord(rng), coord(rng)};
  return pts;
}

std::vector<GroupWord> random_words(std::size_t count, int max_len) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> len(0, max_len), pick(0, 4);
  std::vector<GroupWord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Letter> letters(static_cast<std::size_t>(len(rng)));
    for (auto& l : letters) {
      const int p = pick(rng);
      l = p == 4 ? Letter{Gen::Kappa, 1}
                 : Letter{p < 2 ? Gen::Alpha : Gen::Beta, p % 2 ? -1 : 1};
    }
    out.push_back(normalize(letters));
  }
  return out;
}

std::vector<Hyperplane> dense_samples(int segments) {
  const auto loop = make_alpha_loop(16, 0.25, segments);
  std::vector<Hyperplane> out;
  for (const auto& h : loop.samples) out.push_back(h.normalized());
  return out;
}

void BM_Frontier(benchmark::State& state) {
  const auto pts = random_frontier(static_cast<std::size_t>(state.range(0)));
  const auto maps = orbit_maps(Parity::Even);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::expand_frontier(pts, maps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FrontierSerial(benchmark::State& state) {
  const auto pts = random_frontier(static_cast<std::size_t>(state.range(0)));
  const auto maps = orbit_maps(Parity::Even);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::expand_frontier_serial(pts, maps));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OrbitBfs(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_bfs({1, 0}, Parity::Even, len));
}

void BM_OrbitBfsSerial(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_bfs_serial({1, 0}, Parity::Even, len));
  }
}

void BM_BatchMatrix(benchmark::State& state) {
  const auto words = random_words(static_cast<std::size_t>(state.range(0)), 24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::batch_matrix_of(words, Parity::Even));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchMatrixSerial(benchmark::State& state) {
  const auto words = random_words(static_cast<std::size_t>(state.range(0)), 24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::batch_matrix_of_serial(words, Parity::Even));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanSamples(benchmark::State& state) {
  const auto samples = dense_samples(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::scan_samples(samples, kDefaultTol));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanSamplesSerial(benchmark::State& state) {
  const auto samples = dense_samples(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::scan_samples_serial(samples, kDefaultTol));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Frontier)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_FrontierSerial)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_OrbitBfs)->Arg(100)->Arg(1000);
BENCHMARK(BM_OrbitBfsSerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_BatchMatrix)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_BatchMatrixSerial)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_ScanSamples)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_ScanSamplesSerial)->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
