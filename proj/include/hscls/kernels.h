#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hscls/real.h"

namespace hscls::kernels {

// Dense inner loops used by the model: dot products against parameter rows,
// scaled row updates, and vector scaling. The scalar versions are the
// reference; wider variants (AVX2 on x86-64, NEON on aarch64) are registered
// at startup and must agree with the scalar path (see tests).
struct Ops {
  const char* name;
  real (*dot)(const real* a, const real* b, std::size_t n);
  void (*axpy)(real* y, real a, const real* x, std::size_t n);  // y += a * x
  void (*scale)(real* y, real a, std::size_t n);                // y *= a
};

// Reference implementation; always present.
const Ops& scalar_ops();

// All implementations usable on this machine, scalar first.
const std::vector<const Ops*>& available();

// The implementation every caller goes through. Defaults to the widest
// available variant; HSCLS_KERNELS=<name> overrides at process start.
const Ops& active();

// Force a specific implementation by name. Returns false (and leaves the
// selection unchanged) if the name is unknown or unsupported here.
bool select(std::string_view name);

}  // namespace hscls::kernels
