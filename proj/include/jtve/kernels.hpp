// Dense numeric kernels. Each kernel exists in a serial reference form and an
// OpenMP form; the parallel form partitions independent output elements only,
// so both produce bitwise-identical results. The dispatching entry points pick
// the parallel form for large problems when parallelism is enabled.
#pragma once

#include <cstddef>

namespace jtve::kernels {

bool parallel_enabled();
void set_parallel(bool on);

// Problems below this flop count always run serially.
inline constexpr std::size_t kParallelFlopThreshold = 32768;

// C[m x n] = A[m x k] · B[k x n]
void matmul_nn(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n);
// C[m x n] = A[m x k] · B[n x k]^T
void matmul_nt(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n);
// C[m x n] = A[k x m]^T · B[k x n]
void matmul_tn(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n);

// Serial reference implementations (used directly by tests and the benchmark).
void matmul_nn_serial(const double* a, const double* b, double* c, std::size_t m,
                      std::size_t k, std::size_t n);
void matmul_nt_serial(const double* a, const double* b, double* c, std::size_t m,
                      std::size_t k, std::size_t n);
void matmul_tn_serial(const double* a, const double* b, double* c, std::size_t m,
                      std::size_t k, std::size_t n);

// out[j] = sum over rows of X[rows x cols]; each column accumulates serially.
void column_sums(const double* x, double* out, std::size_t rows, std::size_t cols);
void column_sums_serial(const double* x, double* out, std::size_t rows,
                        std::size_t cols);

// Pairwise squared Euclidean distances: D[i,j] = |A_i - B_j|^2.
void pairwise_sqdist(const double* a, std::size_t na, const double* b,
                     std::size_t nb, std::size_t dim, double* out);
void pairwise_sqdist_serial(const double* a, std::size_t na, const double* b,
                            std::size_t nb, std::size_t dim, double* out);

}  // namespace jtve::kernels
