#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hscls/dictionaries.h"
#include "hscls/huffman.h"
#include "hscls/matrix.h"

namespace hscls {

enum class LossMode : std::uint8_t { softmax = 0, hs = 1 };

const char* loss_mode_name(LossMode mode);
LossMode loss_mode_from_name(std::string_view name);  // throws on unknown

// Input embeddings (vocab x dim) plus the output side: one row per label in
// softmax mode, one row per tree-internal node in hs mode.
struct ModelParams {
  std::int32_t dim = 0;
  Matrix input;
  Matrix output;
};

// Input entries uniform in [-1/dim, 1/dim] under the seed; output rows zero.
ModelParams init_params(std::int64_t vocab, std::int64_t labels, std::int32_t dim,
                        LossMode mode, std::uint64_t seed);

// h = mean of the input embeddings of doc_tokens (with multiplicity).
// Throws std::invalid_argument("empty document") when no tokens remain.
void compute_hidden(std::span<const std::int32_t> doc_tokens, const ModelParams& params,
                    Vector& h);

// Gradient of one example's loss. Each touched output row's gradient is
// coeff * h; softmax touches all V rows, hs touches the L(gold)-1 path nodes.
struct RowGrad {
  std::int32_t row = 0;
  real coeff = 0.0;
};

struct LossGrad {
  real loss = 0.0;
  Vector grad_h;
  std::vector<RowGrad> rows;
};

// A trained classifier: dictionaries, parameters, and (hs mode) the tree.
struct Model {
  LossMode mode = LossMode::hs;
  Dictionaries dicts;
  ModelParams params;
  HuffmanTree tree;  // leaf_count == 0 in softmax mode

  // Top-k (label index, probability) pairs, descending, ties to the smaller
  // label index. k is clamped to the label count.
  std::vector<std::pair<std::int32_t, real>> predict(const Vector& h, std::int32_t k) const;

  void save(const std::string& path) const;
  static Model load(const std::string& path);
};

}  // namespace hscls
