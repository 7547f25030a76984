#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hscls/corpus.h"

namespace hscls {

// Bidirectional word<->index and label<->index mappings with training
// frequencies. Indices are dense, assigned in first-occurrence order over
// the training corpus, and immutable after build.
class Dictionaries {
 public:
  static Dictionaries build(const TokenCorpus& train);

  std::int32_t nwords() const { return static_cast<std::int32_t>(index_to_word_.size()); }
  std::int32_t nlabels() const { return static_cast<std::int32_t>(index_to_label_.size()); }

  // -1 when absent.
  std::int32_t word_index(std::string_view word) const;
  std::int32_t label_index(std::int64_t raw_label) const;

  const std::string& word(std::int32_t index) const { return index_to_word_[index]; }
  std::int64_t label(std::int32_t index) const { return index_to_label_[index]; }

  std::int64_t word_freq(std::int32_t index) const { return word_freqs_[index]; }
  std::int64_t label_freq(std::int32_t index) const { return label_freqs_[index]; }
  const std::vector<std::int64_t>& label_freqs() const { return label_freqs_; }

  // Token indices of a doc, out-of-vocabulary tokens dropped.
  std::vector<std::int32_t> doc_token_indices(const TokenDoc& doc) const;

  void save(std::ostream& out) const;
  static Dictionaries load(std::istream& in);

 private:
  std::unordered_map<std::string, std::int32_t> word_to_index_;
  std::vector<std::string> index_to_word_;
  std::vector<std::int64_t> word_freqs_;
  std::unordered_map<std::int64_t, std::int32_t> label_to_index_;
  std::vector<std::int64_t> index_to_label_;
  std::vector<std::int64_t> label_freqs_;
};

}  // namespace hscls
