#pragma once

#include <cstdint>

#include "hscls/corpus.h"

namespace hscls {

// Desk-scale corpus generator. Every label owns a private block of token ids;
// `overlap` is the probability that a token is drawn from a pool shared by
// all labels instead, so overlap 0 gives linearly separable classes and
// overlap 1 leaves only the label prior learnable. Label frequencies follow
// a Zipf profile with exponent `label_skew`, with every label guaranteed at
// least one document.
struct SynthConfig {
  std::int64_t n_labels = 10;
  std::int64_t docs_per_label = 10;  // total docs = n_labels * docs_per_label
  std::int32_t tokens_per_doc = 10;
  real label_skew = 1.0;
  real overlap = 0.0;
  std::int32_t max_labels_per_doc = 3;  // labels per doc uniform in [1, max]
  std::uint64_t seed = 1;
};

Corpus generate_synthetic_corpus(const SynthConfig& config);

}  // namespace hscls
