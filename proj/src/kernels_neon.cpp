// NEON kernels for aarch64, where Advanced SIMD is baseline.

#include "hscls/kernels.h"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace hscls::kernels {

namespace {

real dot_neon(const real* a, const real* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  real s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; i++) {
    s += a[i] * b[i];
  }
  return s;
}

void axpy_neon(real* y, real a, const real* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; i++) {
    y[i] += a * x[i];
  }
}

void scale_neon(real* y, real a, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vmulq_f64(vld1q_f64(y + i), va));
  }
  for (; i < n; i++) {
    y[i] *= a;
  }
}

}  // namespace

namespace detail {
const Ops* neon_ops() {
  static const Ops ops{"neon", dot_neon, axpy_neon, scale_neon};
  return &ops;
}
}  // namespace detail

}  // namespace hscls::kernels

#else

namespace hscls::kernels::detail {
const Ops* neon_ops() { return nullptr; }
}  // namespace hscls::kernels::detail

#endif
