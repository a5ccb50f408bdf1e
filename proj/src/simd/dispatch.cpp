#include "ptu/simd/kernels.hpp"

#include <atomic>

#include "kernels_internal.hpp"

namespace ptu::simd {

namespace {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*squared_distance)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*center_row)(double*, const double*, double, const double*, double,
                     std::size_t);
};

constexpr KernelTable kScalarTable = {
    detail::dot_scalar, detail::squared_distance_scalar, detail::sum_scalar,
    detail::axpy_scalar, detail::center_row_scalar};

#if PTU_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table = {
    detail::dot_avx2, detail::squared_distance_avx2, detail::sum_avx2,
    detail::axpy_avx2, detail::center_row_avx2};
#endif

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::Scalar};

const KernelTable* init_table() {
  const KernelTable* t = g_table.load(std::memory_order_acquire);
  if (t) return t;
#if PTU_HAVE_AVX2_KERNELS
  if (cpu_supports_avx2()) {
    g_backend.store(Backend::Avx2, std::memory_order_relaxed);
    g_table.store(&kAvx2Table, std::memory_order_release);
    return &kAvx2Table;
  }
#endif
  g_backend.store(Backend::Scalar, std::memory_order_relaxed);
  g_table.store(&kScalarTable, std::memory_order_release);
  return &kScalarTable;
}

inline const KernelTable& table() {
  const KernelTable* t = g_table.load(std::memory_order_acquire);
  return t ? *t : *init_table();
}

}  // namespace

bool cpu_supports_avx2() {
#if PTU_HAVE_AVX2_KERNELS
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  table();
  return g_backend.load(std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

void set_backend(Backend b) {
#if PTU_HAVE_AVX2_KERNELS
  if (b == Backend::Avx2 && cpu_supports_avx2()) {
    g_backend.store(Backend::Avx2, std::memory_order_relaxed);
    g_table.store(&kAvx2Table, std::memory_order_release);
    return;
  }
#else
  (void)b;
#endif
  g_backend.store(Backend::Scalar, std::memory_order_relaxed);
  g_table.store(&kScalarTable, std::memory_order_release);
}

double dot(const double* a, const double* b, std::size_t n) {
  return table().dot(a, b, n);
}

double squared_distance(const double* a, const double* b, std::size_t n) {
  return table().squared_distance(a, b, n);
}

double sum(const double* a, std::size_t n) { return table().sum(a, n); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  table().axpy(alpha, x, y, n);
}

void center_row(double* dst, const double* d, double row_mean_i,
                const double* row_means, double grand_mean, std::size_t n) {
  table().center_row(dst, d, row_mean_i, row_means, grand_mean, n);
}

}  // namespace ptu::simd
