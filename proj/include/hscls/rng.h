#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hscls/real.h"

namespace hscls {

// mt19937_64 with explicit bounded-int and uniform-real mappings, so every
// stream of draws is identical across standard libraries and platforms.
// std::uniform_int_distribution is implementation-defined; this is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform integer in [0, n), n >= 1. Lemire multiply-shift reduction.
  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Uniform real in [lo, hi) with 53 random bits.
  real uniform(real lo, real hi) {
    const real u = static_cast<real>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  // Fisher-Yates; the draw sequence is part of the determinism contract.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; i--) {
      const std::size_t j = below(static_cast<std::uint32_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hscls
