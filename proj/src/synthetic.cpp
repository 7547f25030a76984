#include "hscls/synthetic.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hscls/rng.h"

namespace hscls {

namespace {

// Document quotas proportional to Zipf weights, each label floored at one
// doc, remainders to the largest fractional parts.
std::vector<std::int64_t> label_quotas(const SynthConfig& config) {
  const std::int64_t n = config.n_labels;
  const std::int64_t total = n * config.docs_per_label;
  std::vector<real> weights(n);
  real weight_sum = 0.0;
  for (std::int64_t i = 0; i < n; i++) {
    weights[i] = std::pow(static_cast<real>(i + 1), -config.label_skew);
    weight_sum += weights[i];
  }
  const std::int64_t spare = total - n;  // after the floor of 1 each
  std::vector<std::int64_t> quotas(n, 1);
  std::vector<std::pair<real, std::int64_t>> remainders(n);
  std::int64_t assigned = 0;
  for (std::int64_t i = 0; i < n; i++) {
    const real share = static_cast<real>(spare) * weights[i] / weight_sum;
    const std::int64_t whole = static_cast<std::int64_t>(std::floor(share));
    quotas[i] += whole;
    assigned += whole;
    remainders[i] = {share - static_cast<real>(whole), i};
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::int64_t i = 0; i < spare - assigned; i++) {
    quotas[remainders[i].second]++;
  }
  return quotas;
}

}  // namespace

Corpus generate_synthetic_corpus(const SynthConfig& config) {
  if (config.n_labels < 1 || config.docs_per_label < 1 || config.tokens_per_doc < 1 ||
      config.max_labels_per_doc < 1) {
    throw std::invalid_argument("synthetic corpus: all counts must be >= 1");
  }
  if (config.overlap < 0.0 || config.overlap > 1.0) {
    throw std::invalid_argument("synthetic corpus: overlap must be in [0, 1]");
  }

  Rng rng(config.seed);
  const std::int64_t n = config.n_labels;
  const std::int32_t block = config.tokens_per_doc;  // tokens owned per label
  const std::int64_t shared_base = n * block + 1;    // shared pool after all blocks

  // Zipf cumulative for extra-label draws.
  std::vector<real> cumulative(n);
  real acc = 0.0;
  for (std::int64_t i = 0; i < n; i++) {
    acc += std::pow(static_cast<real>(i + 1), -config.label_skew);
    cumulative[i] = acc;
  }
  const auto draw_zipf_label = [&]() {
    const real u = rng.uniform(0.0, acc);
    return static_cast<std::int64_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
  };

  const std::vector<std::int64_t> quotas = label_quotas(config);
  Corpus corpus;
  corpus.provenance.source = "synthetic";
  corpus.provenance.seed = config.seed;
  for (std::int64_t primary = 0; primary < n; primary++) {
    for (std::int64_t d = 0; d < quotas[primary]; d++) {
      SparseDoc doc;
      doc.labels.push_back(primary + 1);  // raw ids are 1-based
      const std::int32_t want =
          1 + static_cast<std::int32_t>(rng.below(config.max_labels_per_doc));
      for (std::int32_t attempt = 0;
           attempt < 8 * want && static_cast<std::int32_t>(doc.labels.size()) < want;
           attempt++) {
        const std::int64_t extra = draw_zipf_label() + 1;
        if (std::find(doc.labels.begin(), doc.labels.end(), extra) == doc.labels.end()) {
          doc.labels.push_back(extra);
        }
      }

      std::map<std::int64_t, std::int64_t> counts;
      for (std::int32_t t = 0; t < config.tokens_per_doc; t++) {
        std::int64_t token;
        if (rng.uniform(0.0, 1.0) < config.overlap) {
          token = shared_base + rng.below(static_cast<std::uint32_t>(block));
        } else {
          const std::int64_t owner =
              doc.labels[rng.below(static_cast<std::uint32_t>(doc.labels.size()))] - 1;
          token = owner * block + 1 + rng.below(static_cast<std::uint32_t>(block));
        }
        counts[token]++;
      }
      doc.features.reserve(counts.size());
      for (const auto& [token, count] : counts) {
        doc.features.push_back({token, static_cast<real>(count)});
      }
      corpus.docs.push_back(std::move(doc));
    }
  }

  std::vector<std::uint32_t> order(corpus.docs.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<SparseDoc> shuffled(corpus.docs.size());
  for (std::size_t i = 0; i < order.size(); i++) {
    shuffled[i] = std::move(corpus.docs[order[i]]);
  }
  corpus.docs = std::move(shuffled);
  return corpus;
}

}  // namespace hscls
