#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hscls/real.h"

namespace hscls {

// One non-zero term of a sparse document vector.
struct Feature {
  std::int64_t id = 0;
  real value = 0.0;

  bool operator==(const Feature&) const = default;
};

// One labeled document: label ids plus sparse (term, tf) features.
// Feature ids are unique within a doc and values are strictly positive;
// zero-valued features are never materialized.
struct SparseDoc {
  std::vector<std::int64_t> labels;
  std::vector<Feature> features;

  bool operator==(const SparseDoc&) const = default;
};

struct Provenance {
  std::string source;
  std::int64_t top_n = 0;  // 0 = unfiltered
  std::uint64_t seed = 0;
};

struct Corpus {
  std::vector<SparseDoc> docs;
  Provenance provenance;
};

// Average labels per doc and the derived prediction count.
struct PrepStats {
  std::int64_t n = 0;
  real avg_labels_per_doc = 0.0;
  std::int64_t predict_k = 1;
};

struct ParseWarnings {
  std::uint64_t duplicate_labels = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::uint64_t line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line_no_(line_no) {}

  std::uint64_t line_no() const { return line_no_; }

 private:
  std::uint64_t line_no_;
};

class PrepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line grammar: `label(, label)* (feat:value)*`, arbitrary whitespace between
// tokens, labels comma-separated (spaces around commas tolerated). Duplicate
// labels are dropped with a warning; duplicate feature ids are an error.
SparseDoc parse_libsvm_line(std::string_view line, std::uint64_t line_no = 0,
                            ParseWarnings* warnings = nullptr);

// Inverse of parse_libsvm_line up to whitespace; used to materialize corpora.
std::string to_libsvm_line(const SparseDoc& doc);

Corpus read_libsvm(std::istream& in, const std::string& source,
                   ParseWarnings* warnings = nullptr);
Corpus load_libsvm(const std::string& path, ParseWarnings* warnings = nullptr);
void write_libsvm(const Corpus& corpus, std::ostream& out);

std::map<std::int64_t, std::int64_t> count_label_frequencies(const Corpus& corpus);

// The n most frequent labels, ordered by count descending, ties broken by
// smaller label id. Returns all labels when fewer than n exist.
std::vector<std::int64_t> select_top_n_labels(
    const std::map<std::int64_t, std::int64_t>& freqs, std::int64_t n);

// Keeps each doc's intersection with `keep`; drops docs left without labels.
// Feature lists pass through untouched.
Corpus filter_to_top_n(const Corpus& corpus, const std::vector<std::int64_t>& keep);

// `__label__<id>` per label, then `w<feat>` per feature; tf stripped.
std::string to_classifier_format(const SparseDoc& doc);

PrepStats avg_labels_and_k(const Corpus& corpus);

// Seeded permutation, then exact partition: train gets floor(fraction * N).
std::pair<Corpus, Corpus> shuffle_split(const Corpus& corpus, real train_fraction,
                                        std::uint64_t seed);

// Classifier-format side: `__label__<id>` tokens followed by word tokens.
struct TokenDoc {
  std::vector<std::int64_t> labels;
  std::vector<std::string> tokens;
};

struct TokenCorpus {
  std::vector<TokenDoc> docs;
};

TokenDoc parse_classifier_line(std::string_view line, std::uint64_t line_no = 0);
TokenCorpus load_classifier_file(const std::string& path);
TokenCorpus read_classifier(std::istream& in);

// View of a prepped corpus as classifier-format docs (labels + `w<id>` tokens).
TokenCorpus to_token_corpus(const Corpus& corpus);

}  // namespace hscls
