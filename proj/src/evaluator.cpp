#include "hscls/evaluator.h"

#include <algorithm>
#include <unordered_set>

namespace hscls {

std::vector<std::vector<std::int64_t>> predict_corpus(const Model& model,
                                                      const TokenCorpus& test,
                                                      std::int32_t k) {
  std::vector<std::vector<std::int64_t>> preds;
  preds.reserve(test.docs.size());
  Vector h(model.params.dim);
  for (const TokenDoc& doc : test.docs) {
    const std::vector<std::int32_t> tokens = model.dicts.doc_token_indices(doc);
    std::vector<std::int64_t> doc_preds;
    if (!tokens.empty()) {
      compute_hidden(tokens, model.params, h);
      for (const auto& [label_index, prob] : model.predict(h, k)) {
        doc_preds.push_back(model.dicts.label(label_index));
      }
    }
    preds.push_back(std::move(doc_preds));
  }
  return preds;
}

Confusion confusion_counts(const std::vector<std::vector<std::int64_t>>& preds,
                           const std::vector<std::vector<std::int64_t>>& golds,
                           const std::vector<std::int64_t>& classes) {
  Confusion out;
  for (std::int64_t c : classes) {
    out.per_class[c];
  }
  for (std::size_t doc = 0; doc < preds.size(); doc++) {
    const std::unordered_set<std::int64_t> pred_set(preds[doc].begin(), preds[doc].end());
    const std::unordered_set<std::int64_t> gold_set(golds[doc].begin(), golds[doc].end());
    for (std::int64_t label : pred_set) {
      auto it = out.per_class.find(label);
      if (it == out.per_class.end()) {
        it = out.per_class.emplace(label, ClassCounts{}).first;
        out.unknown_predicted++;
      }
      if (gold_set.contains(label)) {
        it->second.tp++;
      } else {
        it->second.fp++;
      }
    }
    for (std::int64_t label : gold_set) {
      if (!pred_set.contains(label)) {
        out.per_class[label].fn++;
      }
    }
  }
  return out;
}

MacroReport macro_scores(const Confusion& confusion, std::int32_t k) {
  MacroReport report;
  report.per_class = confusion.per_class;
  report.unknown_predicted = confusion.unknown_predicted;
  report.k = k;
  if (report.per_class.empty()) {
    return report;
  }
  real precision_sum = 0.0;
  real recall_sum = 0.0;
  for (const auto& [label, counts] : report.per_class) {
    const std::int64_t pred = counts.tp + counts.fp;
    const std::int64_t gold = counts.tp + counts.fn;
    precision_sum += pred > 0 ? static_cast<real>(counts.tp) / static_cast<real>(pred) : 0.0;
    recall_sum += gold > 0 ? static_cast<real>(counts.tp) / static_cast<real>(gold) : 0.0;
  }
  const real size = static_cast<real>(report.per_class.size());
  report.map = precision_sum / size;
  report.mar = recall_sum / size;
  report.maf =
      report.map + report.mar > 0.0
          ? 2.0 * report.map * report.mar / (report.map + report.mar)
          : 0.0;
  return report;
}

}  // namespace hscls
