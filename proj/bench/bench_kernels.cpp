// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "skelefib/kernels.hpp"
#include "skelefib/standard_models.hpp"

using namespace skelefib;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  return m;
}

std::vector<StratumData> random_strata(std::size_t count) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<long> mult(1, 6), bee(1, 5);
  std::vector<StratumData> out;
  while (out.size() < count) {
    StratumData d;
    const std::size_t n = dim(rng);
    Integer total = 0;
    for (std::size_t k = 0; k < n; ++k) {
      d.j_ids.push_back(static_cast<DivisorId>(k + 1));
      d.n_j.push_back(mult(rng));
      d.b.push_back(bee(rng));
      total += d.n_j.back() * d.b.back();
    }
    d.n_zero = mult(rng);
    d.n_inf = total - d.n_zero;
    if (d.n_inf < 1 || d.n_inf > 6) continue;
    d.zero_id = static_cast<DivisorId>(n + 1);
    d.inf_id = static_cast<DivisorId>(n + 2);
    out.push_back(d);
  }
  return out;
}

std::vector<ValuedPoint> random_points(const DegenerationModel& m, std::size_t count) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> w(1, 97);
  const std::vector<FaceId> tops = m.top_faces();
  std::vector<ValuedPoint> out;
  for (std::size_t k = 0; k < count; ++k) {
    const Face& f = m.face(tops[k % tops.size()]);
    std::vector<long> ws;
    long total = 0;
    for (std::size_t i = 0; i < f.vertices.size(); ++i) total += ws.emplace_back(w(rng));
    ValuedPoint x{f.id, {}};
    for (std::size_t i = 0; i < f.vertices.size(); ++i)
      x.q.emplace(f.vertices[i], make_rational(ws[i], total * m.divisor(f.vertices[i]).N));
    out.push_back(x);
  }
  return out;
}

void BM_RankSerial(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::exact_rank_serial(m));
}
void BM_RankParallel(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::exact_rank_parallel(m));
}
BENCHMARK(BM_RankSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_FansSerial(benchmark::State& state) {
  const auto strata = random_strata(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::verify_fans_serial(strata));
}
void BM_FansParallel(benchmark::State& state) {
  const auto strata = random_strata(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::verify_fans_parallel(strata));
}
BENCHMARK(BM_FansSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FansParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_RetractSerial(benchmark::State& state) {
  const DegenerationModel m = k3_tetrahedron();
  const auto xs = random_points(m, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::retract_serial(m, xs));
}
void BM_RetractParallel(benchmark::State& state) {
  const DegenerationModel m = k3_tetrahedron();
  const auto xs = random_points(m, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::retract_parallel(m, xs));
}
BENCHMARK(BM_RetractSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RetractParallel)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
