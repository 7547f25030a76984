#include "hscls/corpus.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "hscls/rng.h"

namespace hscls {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) i++;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) j++;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::uint64_t line_no,
                       const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

real parse_value(std::string_view tok, std::uint64_t line_no) {
  real v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v) || v < 0.0) {
    throw ParseError(line_no, "bad feature value '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

SparseDoc parse_libsvm_line(std::string_view line, std::uint64_t line_no,
                            ParseWarnings* warnings) {
  SparseDoc doc;
  bool in_features = false;
  std::unordered_set<std::int64_t> seen_labels;
  std::unordered_set<std::int64_t> seen_feats;

  for (std::string_view tok : split_ws(line)) {
    const std::size_t colon = tok.find(':');
    if (colon != std::string_view::npos) {
      in_features = true;
      const std::int64_t feat = parse_int(tok.substr(0, colon), line_no, "feature index");
      const real value = parse_value(tok.substr(colon + 1), line_no);
      if (!seen_feats.insert(feat).second) {
        throw ParseError(line_no, "duplicate feature index " + std::to_string(feat));
      }
      if (value > 0.0) {
        doc.features.push_back({feat, value});
      }
      continue;
    }
    if (in_features) {
      throw ParseError(line_no, "label token '" + std::string(tok) + "' after features");
    }
    // A label token may carry comma-separated ids and stray commas from
    // spacing like "545, 32".
    std::size_t start = 0;
    while (start <= tok.size()) {
      const std::size_t comma = tok.find(',', start);
      const std::string_view part =
          tok.substr(start, comma == std::string_view::npos ? tok.npos : comma - start);
      if (!part.empty()) {
        const std::int64_t label = parse_int(part, line_no, "label");
        if (seen_labels.insert(label).second) {
          doc.labels.push_back(label);
        } else if (warnings != nullptr) {
          warnings->duplicate_labels++;
        }
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }

  if (doc.labels.empty()) {
    throw ParseError(line_no, "no labels");
  }
  return doc;
}

std::string to_libsvm_line(const SparseDoc& doc) {
  std::ostringstream out;
  for (std::size_t i = 0; i < doc.labels.size(); i++) {
    if (i > 0) out << ", ";
    out << doc.labels[i];
  }
  out.precision(17);
  for (const Feature& f : doc.features) {
    out << ' ' << f.id << ':' << f.value;
  }
  return out.str();
}

Corpus read_libsvm(std::istream& in, const std::string& source, ParseWarnings* warnings) {
  Corpus corpus;
  corpus.provenance.source = source;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (split_ws(line).empty()) continue;
    corpus.docs.push_back(parse_libsvm_line(line, line_no, warnings));
  }
  return corpus;
}

Corpus load_libsvm(const std::string& path, ParseWarnings* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(path + " cannot be opened for reading");
  }
  return read_libsvm(in, path, warnings);
}

void write_libsvm(const Corpus& corpus, std::ostream& out) {
  for (const SparseDoc& doc : corpus.docs) {
    out << to_libsvm_line(doc) << '\n';
  }
}

std::map<std::int64_t, std::int64_t> count_label_frequencies(const Corpus& corpus) {
  std::map<std::int64_t, std::int64_t> freqs;
  for (const SparseDoc& doc : corpus.docs) {
    for (std::int64_t label : doc.labels) {
      freqs[label]++;
    }
  }
  return freqs;
}

std::vector<std::int64_t> select_top_n_labels(
    const std::map<std::int64_t, std::int64_t>& freqs, std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> by_count(freqs.begin(), freqs.end());
  std::sort(by_count.begin(), by_count.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (n < static_cast<std::int64_t>(by_count.size())) {
    by_count.resize(static_cast<std::size_t>(n));
  }
  std::vector<std::int64_t> out;
  out.reserve(by_count.size());
  for (const auto& [label, count] : by_count) {
    out.push_back(label);
  }
  return out;
}

Corpus filter_to_top_n(const Corpus& corpus, const std::vector<std::int64_t>& keep) {
  const std::unordered_set<std::int64_t> keep_set(keep.begin(), keep.end());
  Corpus out;
  out.provenance = corpus.provenance;
  out.provenance.top_n = static_cast<std::int64_t>(keep.size());
  for (const SparseDoc& doc : corpus.docs) {
    SparseDoc kept;
    for (std::int64_t label : doc.labels) {
      if (keep_set.contains(label)) {
        kept.labels.push_back(label);
      }
    }
    if (kept.labels.empty()) continue;
    kept.features = doc.features;
    out.docs.push_back(std::move(kept));
  }
  if (out.docs.empty()) {
    throw PrepError("no documents carry any of the selected labels");
  }
  return out;
}

std::string to_classifier_format(const SparseDoc& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.labels.size(); i++) {
    if (i > 0) out += ' ';
    out += "__label__" + std::to_string(doc.labels[i]);
  }
  for (const Feature& f : doc.features) {
    out += " w" + std::to_string(f.id);
  }
  return out;
}

PrepStats avg_labels_and_k(const Corpus& corpus) {
  if (corpus.docs.empty()) {
    throw PrepError("cannot compute label statistics of an empty corpus");
  }
  std::int64_t total = 0;
  for (const SparseDoc& doc : corpus.docs) {
    total += static_cast<std::int64_t>(doc.labels.size());
  }
  PrepStats stats;
  stats.n = corpus.provenance.top_n;
  stats.avg_labels_per_doc =
      static_cast<real>(total) / static_cast<real>(corpus.docs.size());
  // round half-up
  stats.predict_k = static_cast<std::int64_t>(std::floor(stats.avg_labels_per_doc + 0.5));
  return stats;
}

std::pair<Corpus, Corpus> shuffle_split(const Corpus& corpus, real train_fraction,
                                        std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw PrepError("train fraction must be in (0, 1)");
  }
  const std::size_t n = corpus.docs.size();
  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; i++) order[i] = static_cast<std::uint32_t>(i);
  Rng rng(seed);
  rng.shuffle(order);

  const std::size_t train_size =
      static_cast<std::size_t>(std::floor(train_fraction * static_cast<real>(n)));
  if (train_size == 0 || train_size == n) {
    throw PrepError("split leaves an empty side (" + std::to_string(train_size) + "/" +
                    std::to_string(n - train_size) + ")");
  }

  Corpus train, test;
  train.provenance = corpus.provenance;
  train.provenance.seed = seed;
  test.provenance = train.provenance;
  train.docs.reserve(train_size);
  test.docs.reserve(n - train_size);
  for (std::size_t i = 0; i < n; i++) {
    (i < train_size ? train : test).docs.push_back(corpus.docs[order[i]]);
  }
  return {std::move(train), std::move(test)};
}

TokenDoc parse_classifier_line(std::string_view line, std::uint64_t line_no) {
  static constexpr std::string_view kLabelPrefix = "__label__";
  TokenDoc doc;
  for (std::string_view tok : split_ws(line)) {
    if (tok.starts_with(kLabelPrefix)) {
      doc.labels.push_back(parse_int(tok.substr(kLabelPrefix.size()), line_no, "label"));
    } else {
      doc.tokens.emplace_back(tok);
    }
  }
  if (doc.labels.empty()) {
    throw ParseError(line_no, "no labels");
  }
  return doc;
}

TokenCorpus read_classifier(std::istream& in) {
  TokenCorpus corpus;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (split_ws(line).empty()) continue;
    corpus.docs.push_back(parse_classifier_line(line, line_no));
  }
  return corpus;
}

TokenCorpus load_classifier_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(path + " cannot be opened for reading");
  }
  return read_classifier(in);
}

TokenCorpus to_token_corpus(const Corpus& corpus) {
  TokenCorpus out;
  out.docs.reserve(corpus.docs.size());
  for (const SparseDoc& doc : corpus.docs) {
    TokenDoc td;
    td.labels = doc.labels;
    td.tokens.reserve(doc.features.size());
    for (const Feature& f : doc.features) {
      td.tokens.push_back("w" + std::to_string(f.id));
    }
    out.docs.push_back(std::move(td));
  }
  return out;
}

}  // namespace hscls
