#pragma once

#include <cstddef>
#include <span>

// Dense matrix kernels on row-major buffers. The default versions split output
// rows across OpenMP threads; each output element is always accumulated in the
// same order, so results do not depend on the thread count. The serial
// reference versions are naive triple loops kept for testing and benchmarks.
namespace pace::nn::kernels {

// C[m,n] (+)= A[m,k] * B[k,n]
void gemm_nn(std::span<const double> a, std::span<const double> b, std::span<double> c, std::size_t m,
             std::size_t k, std::size_t n, bool accumulate);

// C[k,n] += A[m,k]^T * B[m,n]; the sum over m runs in increasing order.
void gemm_tn_acc(std::span<const double> a, std::span<const double> b, std::span<double> c,
                 std::size_t m, std::size_t k, std::size_t n);

// C[m,k] = A[m,n] * B[k,n]^T
void gemm_nt(std::span<const double> a, std::span<const double> b, std::span<double> c, std::size_t m,
             std::size_t n, std::size_t k);

// out[j] += sum_i A[i, j]
void column_sum_acc(std::span<const double> a, std::span<double> out, std::size_t m, std::size_t n);

namespace reference {

void gemm_nn(std::span<const double> a, std::span<const double> b, std::span<double> c, std::size_t m,
             std::size_t k, std::size_t n, bool accumulate);
void gemm_tn_acc(std::span<const double> a, std::span<const double> b, std::span<double> c,
                 std::size_t m, std::size_t k, std::size_t n);
void gemm_nt(std::span<const double> a, std::span<const double> b, std::span<double> c, std::size_t m,
             std::size_t n, std::size_t k);

}  // namespace reference

// Threads available to the parallel kernels (omp_get_max_threads, or 1).
int max_threads();
void set_threads(int n);

}  // namespace pace::nn::kernels
