#include "kernels_internal.hpp"

// Reference kernels. These define the semantics the vectorized variants are
// tested against; keep them straightforward.

namespace ptu::simd::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double squared_distance_scalar(const double* a, const double* b,
                               std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff;
  }
  return acc;
}

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void center_row_scalar(double* dst, const double* d, double row_mean_i,
                       const double* row_means, double grand_mean,
                       std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    dst[j] = -0.5 * (d[j] - row_mean_i - row_means[j] + grand_mean);
  }
}

}  // namespace ptu::simd::detail
