#include "hscls/softmax.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hscls {

std::vector<real> softmax(std::span<const real> scores) {
  std::vector<real> probs(scores.size());
  const real max_score = *std::max_element(scores.begin(), scores.end());
  real denom = 0.0;
  for (std::size_t i = 0; i < scores.size(); i++) {
    probs[i] = std::exp(scores[i] - max_score);
    denom += probs[i];
  }
  for (real& p : probs) {
    p /= denom;
  }
  return probs;
}

std::vector<real> output_scores(const Vector& h, const Matrix& output) {
  std::vector<real> scores(static_cast<std::size_t>(output.rows()));
  for (std::int64_t i = 0; i < output.rows(); i++) {
    scores[i] = output.dot_row(h, i);
  }
  return scores;
}

LossGrad softmax_loss_grad(const Vector& h, std::int32_t gold, const ModelParams& params) {
  const std::vector<real> scores = output_scores(h, params.output);
  const std::vector<real> probs = softmax(scores);

  LossGrad out{0.0, Vector(params.dim), {}};
  out.loss = -std::log(std::max(probs[gold], std::numeric_limits<real>::min()));
  out.rows.resize(probs.size());
  for (std::size_t i = 0; i < probs.size(); i++) {
    const real coeff = probs[i] - (static_cast<std::int32_t>(i) == gold ? 1.0 : 0.0);
    out.rows[i] = {static_cast<std::int32_t>(i), coeff};
    out.grad_h.add_row(params.output, static_cast<std::int64_t>(i), coeff);
  }
  return out;
}

std::vector<std::pair<std::int32_t, real>> softmax_top_k(const Vector& h,
                                                         const ModelParams& params,
                                                         std::int32_t k) {
  const std::vector<real> scores = output_scores(h, params.output);
  const std::vector<real> probs = softmax(scores);
  std::vector<std::pair<std::int32_t, real>> ranked(probs.size());
  for (std::size_t i = 0; i < probs.size(); i++) {
    ranked[i] = {static_cast<std::int32_t>(i), probs[i]};
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), ranked.size());
  ranked.resize(kk);
  return ranked;
}

}  // namespace hscls
