#pragma once

#include <cstddef>

// Vector kernels used by the hot loops (neighbor search, path unfolding,
// double-centering, dense matvecs). Each kernel has a scalar reference
// implementation and an AVX2+FMA variant; the active backend is chosen at
// runtime from CPU capabilities and can be overridden for equivalence tests.
//
// Backends may differ in the last few ulps (FMA contraction, lane-wise
// accumulation order), but each backend is deterministic: the same inputs
// always produce the same bits.

namespace ptu::simd {

enum class Backend { Scalar, Avx2 };

// True if the running CPU supports the AVX2+FMA code path.
bool cpu_supports_avx2();

Backend active_backend();
const char* backend_name(Backend b);

// Overrides the dispatch table. Selecting Avx2 on a CPU without AVX2
// support is ignored and the scalar table stays active.
void set_backend(Backend b);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i (a[i] - b[i])^2
double squared_distance(const double* a, const double* b, std::size_t n);

// sum_i a[i]
double sum(const double* a, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// One row of the double-centering transform:
//   dst[j] = -0.5 * (d[j] - row_mean_i - row_means[j] + grand_mean)
void center_row(double* dst, const double* d, double row_mean_i,
                const double* row_means, double grand_mean, std::size_t n);

}  // namespace ptu::simd
