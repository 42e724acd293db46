// Parallel kernels against their serial references.  Arguments are the
// number of inputs per batch.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ssg/abelian.hpp"
#include "ssg/sweep.hpp"
#include "ssg/system_file.hpp"

using namespace ssg;

namespace {

  SystemDocument const& grigorchuk() {
    static SystemDocument doc = load_system(std::string(SSG_DATA_DIR) + "/grigorchuk.system");
    return doc;
  }

  std::vector<GroupElement> ball(std::size_t n) {
    SearchBudget budget;
    budget.max_elements = n;
    return group_ball(grigorchuk().system, budget).elements;
  }

  std::vector<KatsuraData> random_pairs(std::size_t count, std::size_t n) {
    std::mt19937             rng(5);
    std::vector<KatsuraData> out(count);
    for (auto& d : out) {
      d.A.assign(n, std::vector<BigInt>(n));
      d.B.assign(n, std::vector<BigInt>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          d.A[i][j] = (i == j) ? 2 + rng() % 4 : rng() % 6;
          d.B[i][j] = d.A[i][j] == 0 ? 0 : int(rng() % 21) - 10;
        }
      }
    }
    return out;
  }

  void BM_sfp_sweep(benchmark::State& state) {
    auto elements = ball(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(sfp_sweep(grigorchuk().system, elements));
    }
  }

  void BM_sfp_sweep_serial(benchmark::State& state) {
    auto elements = ball(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(sfp_sweep_serial(grigorchuk().system, elements));
    }
  }

  void BM_katsura_batch(benchmark::State& state) {
    auto data = random_pairs(state.range(0), 6);
    for (auto _ : state) {
      benchmark::DoNotOptimize(katsura_ktheory_batch(data));
    }
  }

  void BM_katsura_batch_serial(benchmark::State& state) {
    auto data = random_pairs(state.range(0), 6);
    for (auto _ : state) {
      benchmark::DoNotOptimize(katsura_ktheory_batch_serial(data));
    }
  }

}  // namespace

BENCHMARK(BM_sfp_sweep)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sfp_sweep_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_katsura_batch)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_katsura_batch_serial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
