#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hscls/corpus.h"
#include "hscls/model.h"

namespace hscls {

struct TrainConfig {
  std::int32_t dim = 200;
  std::int32_t epochs = 100;
  real lr0 = 0.25;
  LossMode loss = LossMode::hs;
  std::uint64_t seed = 1;
  std::int32_t workers = 1;
  // Single worker with exclusive parameter ownership; bit-reproducible.
  // workers > 1 requires deterministic = false (racy shared writes).
  bool deterministic = true;
};

struct TrainReport {
  double wall_clock_s = 0.0;   // whole call: dictionaries, tree, epochs
  double loop_seconds = 0.0;   // epoch loop only
  std::uint64_t examples_processed = 0;
  double final_mean_loss = 0.0;
  std::vector<double> epoch_mean_loss;
  TrainConfig config;
};

class TrainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// lr0 * (1 - update_index / total_updates), clamped at 0.
real learning_rate(std::uint64_t update_index, std::uint64_t total_updates, real lr0);

// SGD over the corpus: epochs * |corpus| visits, one gold label sampled
// uniformly per visit, linear lr decay to zero across all scheduled visits.
// Aborts with TrainError if the loss goes non-finite.
std::pair<Model, TrainReport> train(const TokenCorpus& corpus, const TrainConfig& config);

}  // namespace hscls
