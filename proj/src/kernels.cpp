#include "hscls/kernels.h"

#include <cstdio>
#include <cstdlib>

namespace hscls::kernels {

namespace detail {
const Ops* avx2_ops();
const Ops* neon_ops();
}  // namespace detail

namespace {

bool cpu_supports(const Ops* ops) {
  if (ops == nullptr) {
    return false;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (std::string_view(ops->name) == "avx2") {
    return __builtin_cpu_supports("avx2") != 0;
  }
#endif
  // NEON is baseline on aarch64; anything registered there is usable.
  return true;
}

std::vector<const Ops*> build_available() {
  std::vector<const Ops*> out;
  out.push_back(&scalar_ops());
  for (const Ops* ops : {detail::avx2_ops(), detail::neon_ops()}) {
    if (cpu_supports(ops)) {
      out.push_back(ops);
    }
  }
  return out;
}

const Ops* find(std::string_view name) {
  for (const Ops* ops : available()) {
    if (name == ops->name) {
      return ops;
    }
  }
  return nullptr;
}

const Ops* initial_selection() {
  if (const char* env = std::getenv("HSCLS_KERNELS")) {
    if (const Ops* ops = find(env)) {
      return ops;
    }
    std::fprintf(stderr, "hscls: HSCLS_KERNELS=%s not available, using default\n", env);
  }
  return available().back();
}

const Ops*& selection() {
  static const Ops* sel = initial_selection();
  return sel;
}

}  // namespace

const std::vector<const Ops*>& available() {
  static const std::vector<const Ops*> all = build_available();
  return all;
}

const Ops& active() { return *selection(); }

bool select(std::string_view name) {
  const Ops* ops = find(name);
  if (ops == nullptr) {
    return false;
  }
  selection() = ops;
  return true;
}

}  // namespace hscls::kernels
