#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hscls/corpus.h"
#include "hscls/model.h"

namespace hscls {

struct ClassCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  bool operator==(const ClassCounts&) const = default;
};

struct Confusion {
  std::map<std::int64_t, ClassCounts> per_class;  // keyed by raw label id
  // Predicted labels outside the class set; they join per_class with zero
  // gold support and are flagged here.
  std::int64_t unknown_predicted = 0;
};

struct MacroReport {
  std::map<std::int64_t, ClassCounts> per_class;
  real map = 0.0;
  real mar = 0.0;
  real maf = 0.0;
  std::int32_t k = 0;
  std::int64_t unknown_predicted = 0;
};

// Exactly k predicted labels per doc (fewer only when the model knows fewer
// labels); docs with no in-vocabulary tokens predict nothing.
std::vector<std::vector<std::int64_t>> predict_corpus(const Model& model,
                                                      const TokenCorpus& test,
                                                      std::int32_t k);

// Per-doc, per-class tp/fp/fn sums over the class set.
Confusion confusion_counts(const std::vector<std::vector<std::int64_t>>& preds,
                           const std::vector<std::vector<std::int64_t>>& golds,
                           const std::vector<std::int64_t>& classes);

// Macro precision/recall as unweighted per-class means (0/0 counts as 0)
// and their harmonic mean.
MacroReport macro_scores(const Confusion& confusion, std::int32_t k);

}  // namespace hscls
