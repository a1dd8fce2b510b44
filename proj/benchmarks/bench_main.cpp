#include <benchmark/benchmark.h>

#include "ckit/calgmod/enumerate.hpp"
#include "ckit/cubic27/theta.hpp"
#include "ckit/foundation/fp_kernel.hpp"
#include "ckit/jordan/hermitian.hpp"

using namespace ckit;

namespace {

std::vector<MatrixK> sample_matrices(const FieldContext& ctx, std::size_t rows, std::size_t cols) {
  std::vector<MatrixK> out;
  for (std::uint64_t k = 0; k < 64; ++k) {
    TrialRng rng(1, stream_id("bench_rref"), k);
    out.push_back(random_matrix(ctx, rows, cols, rng));
  }
  return out;
}

void BM_RrefGeneric(benchmark::State& state) {
  const FieldContext f3 = FieldContext::prime(3);
  auto ms = sample_matrices(f3, 6, 12);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rref(ms[i++ % ms.size()]).rank);
}
BENCHMARK(BM_RrefGeneric);

void BM_RrefPacked(benchmark::State& state) {
  const FieldContext f3 = FieldContext::prime(3);
  fp::Kernel ker(3, 12);
  std::vector<fp::Rows> packed;
  for (const auto& m : sample_matrices(f3, 6, 12)) {
    fp::Rows rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      fp::Vec v{};
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = static_cast<std::uint8_t>(m(r, c).residue());
      rows.push_back(v);
    }
    packed.push_back(rows);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    fp::Rows rows = packed[i++ % packed.size()];
    ker.rref(rows);
    benchmark::DoNotOptimize(rows.size());
  }
}
BENCHMARK(BM_RrefPacked);

void BM_OctonionMul(benchmark::State& state) {
  const FieldContext ctx = state.range(0) ? FieldContext::prime(7) : FieldContext::rationals();
  comp::AlgebraTag o(comp::Kind::O, ctx);
  TrialRng rng(2, 2, 2);
  comp::CompElement x = comp::random_element(o, rng), y = comp::random_element(o, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_OctonionMul)->Arg(0)->Arg(1);

void BM_Det3(benchmark::State& state) {
  const FieldContext ctx = state.range(0) ? FieldContext::prime(7) : FieldContext::rationals();
  TrialRng rng(3, 3, 3);
  jordan::HermitianMatrix a = jordan::random_hermitian(comp::AlgebraTag(comp::Kind::O, ctx), 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(jordan::det3(a));
}
BENCHMARK(BM_Det3)->Arg(0)->Arg(1);

void BM_ThetaMap(benchmark::State& state) {
  TrialRng rng(4, 4, 4);
  cubic27::GridTriple t = cubic27::random_grid(FieldContext::rationals(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(cubic27::theta_map(t));
}
BENCHMARK(BM_ThetaMap);

void BM_EnumerateH2(benchmark::State& state) {
  calgmod::EnumerationLimits lim;
  lim.workers = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(calgmod::enumerate_submodules(comp::Kind::H, 2, static_cast<std::size_t>(state.range(0)), 3, lim).total);
}
BENCHMARK(BM_EnumerateH2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateH3(benchmark::State& state) {
  calgmod::EnumerationLimits lim;
  for (auto _ : state)
    benchmark::DoNotOptimize(calgmod::enumerate_submodules(comp::Kind::H, 3, 6, 3, lim).total);
}
BENCHMARK(BM_EnumerateH3)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
