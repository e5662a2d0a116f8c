// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <vector>

#include "pace/core/rng.hpp"
#include "pace/nn/kernels.hpp"
#include "pace/train/gae.hpp"

namespace {

namespace k = pace::nn::kernels;

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  pace::core::RngStream r(seed);
  std::vector<double> v(n);
  for (double& x : v) x = r.uniform(-1, 1);
  return v;
}

// Args: rows (batch), inner width, output width.
void gemm_args(benchmark::internal::Benchmark* b) {
  b->Args({1024, 64, 64})->Args({4096, 128, 128})->Args({16384, 77, 64});
}

template <bool Parallel>
void BM_gemm_nn(benchmark::State& st) {
  const auto m = static_cast<std::size_t>(st.range(0)), kk = static_cast<std::size_t>(st.range(1)),
             n = static_cast<std::size_t>(st.range(2));
  const auto a = random_vec(m * kk, 1), b = random_vec(kk * n, 2);
  std::vector<double> c(m * n);
  for (auto _ : st) {
    if constexpr (Parallel)
      k::gemm_nn(a, b, c, m, kk, n, false);
    else
      k::reference::gemm_nn(a, b, c, m, kk, n, false);
    benchmark::DoNotOptimize(c.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(m * kk * n));
}

template <bool Parallel>
void BM_gemm_tn(benchmark::State& st) {
  const auto m = static_cast<std::size_t>(st.range(0)), kk = static_cast<std::size_t>(st.range(1)),
             n = static_cast<std::size_t>(st.range(2));
  const auto a = random_vec(m * kk, 3), b = random_vec(m * n, 4);
  std::vector<double> c(kk * n);
  for (auto _ : st) {
    if constexpr (Parallel)
      k::gemm_tn_acc(a, b, c, m, kk, n);
    else
      k::reference::gemm_tn_acc(a, b, c, m, kk, n);
    benchmark::DoNotOptimize(c.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(m * kk * n));
}

template <bool Parallel>
void BM_gemm_nt(benchmark::State& st) {
  const auto m = static_cast<std::size_t>(st.range(0)), kk = static_cast<std::size_t>(st.range(1)),
             n = static_cast<std::size_t>(st.range(2));
  const auto a = random_vec(m * n, 5), b = random_vec(kk * n, 6);
  std::vector<double> c(m * kk);
  for (auto _ : st) {
    if constexpr (Parallel)
      k::gemm_nt(a, b, c, m, n, kk);
    else
      k::reference::gemm_nt(a, b, c, m, n, kk);
    benchmark::DoNotOptimize(c.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(m * kk * n));
}

// Args: environments, steps per environment.
template <bool Parallel>
void BM_gae(benchmark::State& st) {
  const auto envs = static_cast<std::size_t>(st.range(0)), steps = static_cast<std::size_t>(st.range(1));
  const std::size_t n = envs * steps;
  const auto rew = random_vec(n, 7), val = random_vec(n, 8), boot = random_vec(envs, 9);
  std::vector<std::uint8_t> meta(n);
  pace::core::RngStream r(10);
  for (auto& f : meta) f = r.bernoulli(0.01);
  std::vector<std::size_t> starts(envs);
  for (std::size_t e = 0; e < envs; ++e) starts[e] = e * steps;
  std::vector<double> adv(n), ret(n);
  for (auto _ : st) {
    if constexpr (Parallel)
      pace::train::compute_gae_segments(rew, val, meta, starts, boot, 0.99, 0.95, adv, ret);
    else
      pace::train::reference::compute_gae_segments(rew, val, meta, starts, boot, 0.99, 0.95, adv, ret);
    benchmark::DoNotOptimize(adv.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(n));
}

}  // namespace

BENCHMARK(BM_gemm_nn<false>)->Name("gemm_nn/serial")->Apply(gemm_args);
BENCHMARK(BM_gemm_nn<true>)->Name("gemm_nn/openmp")->Apply(gemm_args);
BENCHMARK(BM_gemm_tn<false>)->Name("gemm_tn_acc/serial")->Apply(gemm_args);
BENCHMARK(BM_gemm_tn<true>)->Name("gemm_tn_acc/openmp")->Apply(gemm_args);
BENCHMARK(BM_gemm_nt<false>)->Name("gemm_nt/serial")->Apply(gemm_args);
BENCHMARK(BM_gemm_nt<true>)->Name("gemm_nt/openmp")->Apply(gemm_args);
BENCHMARK(BM_gae<false>)->Name("gae/serial")->Args({40, 2000})->Args({16, 4000});
BENCHMARK(BM_gae<true>)->Name("gae/openmp")->Args({40, 2000})->Args({16, 4000});

BENCHMARK_MAIN();
