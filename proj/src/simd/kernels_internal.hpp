#pragma once

#include <cstddef>

// Backend entry points shared between the dispatch table and the
// per-ISA translation units.

namespace ptu::simd::detail {

double dot_scalar(const double* a, const double* b, std::size_t n);
double squared_distance_scalar(const double* a, const double* b, std::size_t n);
double sum_scalar(const double* a, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void center_row_scalar(double* dst, const double* d, double row_mean_i,
                       const double* row_means, double grand_mean,
                       std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
#define PTU_HAVE_AVX2_KERNELS 1
double dot_avx2(const double* a, const double* b, std::size_t n);
double squared_distance_avx2(const double* a, const double* b, std::size_t n);
double sum_avx2(const double* a, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void center_row_avx2(double* dst, const double* d, double row_mean_i,
                     const double* row_means, double grand_mean,
                     std::size_t n);
#else
#define PTU_HAVE_AVX2_KERNELS 0
#endif

}  // namespace ptu::simd::detail
