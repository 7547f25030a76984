#include "hscls/kernels.h"

namespace hscls::kernels {

namespace {

real dot_scalar(const real* a, const real* b, std::size_t n) {
  real s = 0.0;
  for (std::size_t i = 0; i < n; i++) {
    s += a[i] * b[i];
  }
  return s;
}

void axpy_scalar(real* y, real a, const real* x, std::size_t n) {
  for (std::size_t i = 0; i < n; i++) {
    y[i] += a * x[i];
  }
}

void scale_scalar(real* y, real a, std::size_t n) {
  for (std::size_t i = 0; i < n; i++) {
    y[i] *= a;
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", dot_scalar, axpy_scalar, scale_scalar};
  return ops;
}

}  // namespace hscls::kernels
