#pragma once

#include <span>
#include <vector>

#include "hscls/model.h"

namespace hscls {

// Normalized exponentials with max-subtraction, safe for any finite scores.
std::vector<real> softmax(std::span<const real> scores);

// Scores a_i = output_row_i . h for all V rows.
std::vector<real> output_scores(const Vector& h, const Matrix& output);

// Cross-entropy loss and gradients for the flat softmax layer. Dense: every
// output row is touched.
LossGrad softmax_loss_grad(const Vector& h, std::int32_t gold, const ModelParams& params);

// Top-k labels by probability, descending, ties to the smaller label index.
std::vector<std::pair<std::int32_t, real>> softmax_top_k(const Vector& h,
                                                         const ModelParams& params,
                                                         std::int32_t k);

}  // namespace hscls
