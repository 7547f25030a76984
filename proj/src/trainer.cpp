#include "hscls/trainer.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "hscls/hierarchical.h"
#include "hscls/rng.h"
#include "hscls/softmax.h"

namespace hscls {

real learning_rate(std::uint64_t update_index, std::uint64_t total_updates, real lr0) {
  if (update_index >= total_updates) {
    return 0.0;
  }
  return lr0 * (1.0 - static_cast<real>(update_index) / static_cast<real>(total_updates));
}

namespace {

struct TrainDoc {
  std::vector<std::int32_t> tokens;
  std::vector<std::int32_t> labels;
};

struct EpochTally {
  double loss_sum = 0.0;
  std::uint64_t updates = 0;
};

void validate(const TokenCorpus& corpus, const TrainConfig& config) {
  if (corpus.docs.empty()) {
    throw TrainError("training corpus is empty");
  }
  if (config.dim < 1) throw TrainError("dim must be >= 1");
  if (config.epochs < 1) throw TrainError("epochs must be >= 1");
  if (!(config.lr0 > 0.0)) throw TrainError("learning rate must be > 0");
  if (config.workers < 1) throw TrainError("workers must be >= 1");
  if (config.deterministic && config.workers != 1) {
    throw TrainError("deterministic training requires workers = 1");
  }
}

}  // namespace

std::pair<Model, TrainReport> train(const TokenCorpus& corpus, const TrainConfig& config) {
  validate(corpus, config);
  const auto t0 = std::chrono::steady_clock::now();

  Model model;
  model.mode = config.loss;
  model.dicts = Dictionaries::build(corpus);
  model.params = init_params(model.dicts.nwords(), model.dicts.nlabels(), config.dim,
                             config.loss, config.seed);
  if (config.loss == LossMode::hs) {
    model.tree = build_huffman_tree(model.dicts.label_freqs());
  }

  std::vector<TrainDoc> docs(corpus.docs.size());
  for (std::size_t i = 0; i < corpus.docs.size(); i++) {
    docs[i].tokens = model.dicts.doc_token_indices(corpus.docs[i]);
    docs[i].labels.reserve(corpus.docs[i].labels.size());
    for (std::int64_t raw : corpus.docs[i].labels) {
      docs[i].labels.push_back(model.dicts.label_index(raw));
    }
  }

  const std::uint64_t total_visits =
      static_cast<std::uint64_t>(config.epochs) * docs.size();
  std::atomic<std::uint64_t> visits{0};
  std::atomic<bool> aborted{false};
  const std::int32_t workers = config.workers;
  std::vector<std::vector<EpochTally>> tallies(
      workers, std::vector<EpochTally>(config.epochs));

  const auto loop_t0 = std::chrono::steady_clock::now();
  const auto run_worker = [&](std::int32_t worker) {
    Rng rng(config.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(worker));
    std::vector<std::uint32_t> order;
    for (std::size_t i = worker; i < docs.size(); i += workers) {
      order.push_back(static_cast<std::uint32_t>(i));
    }
    Vector h(config.dim);
    for (std::int32_t epoch = 0; epoch < config.epochs; epoch++) {
      rng.shuffle(order);
      EpochTally& tally = tallies[worker][epoch];
      for (std::uint32_t doc_index : order) {
        const TrainDoc& doc = docs[doc_index];
        const std::uint64_t visit = visits.fetch_add(1, std::memory_order_relaxed);
        const real lr = learning_rate(visit, total_visits, config.lr0);
        const std::int32_t gold =
            doc.labels[rng.below(static_cast<std::uint32_t>(doc.labels.size()))];
        if (doc.tokens.empty()) {
          continue;  // nothing to average; the visit still ticks the schedule
        }
        compute_hidden(doc.tokens, model.params, h);
        const LossGrad lg =
            config.loss == LossMode::softmax
                ? softmax_loss_grad(h, gold, model.params)
                : hs_loss_grad(h, gold, model.tree, model.params);
        if (!std::isfinite(lg.loss)) {
          aborted.store(true, std::memory_order_relaxed);
          return;
        }
        tally.loss_sum += lg.loss;
        tally.updates++;
        for (const RowGrad& rg : lg.rows) {
          model.params.output.add_to_row(h, rg.row, -lr * rg.coeff);
        }
        const real input_scale = -lr / static_cast<real>(doc.tokens.size());
        for (std::int32_t token : doc.tokens) {
          model.params.input.add_to_row(lg.grad_h, token, input_scale);
        }
      }
      if (aborted.load(std::memory_order_relaxed)) {
        return;
      }
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::int32_t w = 0; w < workers; w++) {
      pool.emplace_back(run_worker, w);
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }
  const auto t1 = std::chrono::steady_clock::now();

  if (aborted.load()) {
    throw TrainError(
        "loss became non-finite; the learning rate is too high for this data "
        "(lr0 = " + std::to_string(config.lr0) + ")");
  }

  TrainReport report;
  report.config = config;
  report.examples_processed = visits.load();
  report.wall_clock_s = std::chrono::duration<double>(t1 - t0).count();
  report.loop_seconds = std::chrono::duration<double>(t1 - loop_t0).count();
  report.epoch_mean_loss.resize(config.epochs, 0.0);
  for (std::int32_t epoch = 0; epoch < config.epochs; epoch++) {
    double loss_sum = 0.0;
    std::uint64_t updates = 0;
    for (std::int32_t w = 0; w < workers; w++) {
      loss_sum += tallies[w][epoch].loss_sum;
      updates += tallies[w][epoch].updates;
    }
    report.epoch_mean_loss[epoch] = updates > 0 ? loss_sum / static_cast<double>(updates) : 0.0;
  }
  report.final_mean_loss = report.epoch_mean_loss.back();
  return {std::move(model), report};
}

}  // namespace hscls
