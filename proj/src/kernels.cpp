#include "jtve/kernels.hpp"

#include <atomic>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jtve::kernels {

namespace {

std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};

bool use_parallel(std::size_t flops) {
#ifdef _OPENMP
  return g_parallel.load(std::memory_order_relaxed) &&
         flops >= kParallelFlopThreshold;
#else
  (void)flops;
  return false;
#endif
}

// One output row of C = A·B, accumulated in i-k-j order so that every C[i,j]
// sums its k terms in ascending k order regardless of threading.
inline void nn_row(const double* a, const double* b, double* c, std::size_t i,
                   std::size_t k, std::size_t n) {
  double* crow = c + i * n;
  std::memset(crow, 0, n * sizeof(double));
  const double* arow = a + i * k;
  for (std::size_t t = 0; t < k; ++t) {
    const double av = arow[t];
    const double* brow = b + t * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
  }
}

inline void nt_row(const double* a, const double* b, double* c, std::size_t i,
                   std::size_t k, std::size_t n) {
  double* crow = c + i * n;
  const double* arow = a + i * k;
  for (std::size_t j = 0; j < n; ++j) {
    const double* brow = b + j * k;
    double acc = 0.0;
    for (std::size_t t = 0; t < k; ++t) acc += arow[t] * brow[t];
    crow[j] = acc;
  }
}

inline void tn_row(const double* a, const double* b, double* c, std::size_t i,
                   std::size_t r, std::size_t m, std::size_t n) {
  double* crow = c + i * n;
  std::memset(crow, 0, n * sizeof(double));
  for (std::size_t t = 0; t < r; ++t) {
    const double av = a[t * m + i];
    const double* brow = b + t * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
  }
}

inline void sqdist_row(const double* a, const double* b, std::size_t nb,
                       std::size_t dim, double* out_row, std::size_t i) {
  const double* arow = a + i * dim;
  for (std::size_t j = 0; j < nb; ++j) {
    const double* brow = b + j * dim;
    double acc = 0.0;
    for (std::size_t t = 0; t < dim; ++t) {
      const double d = arow[t] - brow[t];
      acc += d * d;
    }
    out_row[j] = acc;
  }
}

}  // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

void matmul_nn_serial(const double* a, const double* b, double* c, std::size_t m,
                      std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) nn_row(a, b, c, i, k, n);
}

void matmul_nt_serial(const double* a, const double* b, double* c, std::size_t m,
                      std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) nt_row(a, b, c, i, k, n);
}

void matmul_tn_serial(const double* a, const double* b, double* c, std::size_t m,
                      std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) tn_row(a, b, c, i, k, m, n);
}

void matmul_nn(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n) {
  if (use_parallel(2 * m * k * n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
      nn_row(a, b, c, static_cast<std::size_t>(i), k, n);
    }
#endif
    return;
  }
  matmul_nn_serial(a, b, c, m, k, n);
}

void matmul_nt(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n) {
  if (use_parallel(2 * m * k * n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
      nt_row(a, b, c, static_cast<std::size_t>(i), k, n);
    }
#endif
    return;
  }
  matmul_nt_serial(a, b, c, m, k, n);
}

void matmul_tn(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n) {
  if (use_parallel(2 * m * k * n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
      tn_row(a, b, c, static_cast<std::size_t>(i), k, m, n);
    }
#endif
    return;
  }
  matmul_tn_serial(a, b, c, m, k, n);
}

void column_sums_serial(const double* x, double* out, std::size_t rows,
                        std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rows; ++i) acc += x[i * cols + j];
    out[j] = acc;
  }
}

void column_sums(const double* x, double* out, std::size_t rows,
                 std::size_t cols) {
  if (use_parallel(rows * cols)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(cols); ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rows; ++i) acc += x[i * cols + j];
      out[j] = acc;
    }
#endif
    return;
  }
  column_sums_serial(x, out, rows, cols);
}

void pairwise_sqdist_serial(const double* a, std::size_t na, const double* b,
                            std::size_t nb, std::size_t dim, double* out) {
  for (std::size_t i = 0; i < na; ++i) sqdist_row(a, b, nb, dim, out + i * nb, i);
}

void pairwise_sqdist(const double* a, std::size_t na, const double* b,
                     std::size_t nb, std::size_t dim, double* out) {
  if (use_parallel(2 * na * nb * dim)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(na); ++i) {
      sqdist_row(a, b, nb, dim, out + static_cast<std::size_t>(i) * nb,
                 static_cast<std::size_t>(i));
    }
#endif
    return;
  }
  pairwise_sqdist_serial(a, na, b, nb, dim, out);
}

}  // namespace jtve::kernels
