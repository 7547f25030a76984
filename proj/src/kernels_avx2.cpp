// AVX2/FMA kernels. This file is compiled with -mavx2 -mfma on x86-64; the
// dispatcher only hands these out after __builtin_cpu_supports("avx2").

#include "hscls/kernels.h"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace hscls::kernels {

namespace {

real dot_avx2(const real* a, const real* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  __m128d lo = _mm256_castpd256_pd128(acc0);
  __m128d hi = _mm256_extractf128_pd(acc0, 1);
  lo = _mm_add_pd(lo, hi);
  real s = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < n; i++) {
    s += a[i] * b[i];
  }
  return s;
}

void axpy_avx2(real* y, real a, const real* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; i++) {
    y[i] += a * x[i];
  }
}

void scale_avx2(real* y, real a, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_mul_pd(_mm256_loadu_pd(y + i), va));
  }
  for (; i < n; i++) {
    y[i] *= a;
  }
}

}  // namespace

namespace detail {
const Ops* avx2_ops() {
  static const Ops ops{"avx2", dot_avx2, axpy_avx2, scale_avx2};
  return &ops;
}
}  // namespace detail

}  // namespace hscls::kernels

#else

namespace hscls::kernels::detail {
const Ops* avx2_ops() { return nullptr; }
}  // namespace hscls::kernels::detail

#endif
