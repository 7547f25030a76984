#include "hscls/dictionaries.h"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace hscls {

Dictionaries Dictionaries::build(const TokenCorpus& train) {
  if (train.docs.empty()) {
    throw std::invalid_argument("cannot build dictionaries from an empty corpus");
  }
  Dictionaries d;
  for (const TokenDoc& doc : train.docs) {
    for (const std::string& token : doc.tokens) {
      auto [it, inserted] = d.word_to_index_.try_emplace(token, d.nwords());
      if (inserted) {
        d.index_to_word_.push_back(token);
        d.word_freqs_.push_back(0);
      }
      d.word_freqs_[it->second]++;
    }
    for (std::int64_t label : doc.labels) {
      auto [it, inserted] = d.label_to_index_.try_emplace(label, d.nlabels());
      if (inserted) {
        d.index_to_label_.push_back(label);
        d.label_freqs_.push_back(0);
      }
      d.label_freqs_[it->second]++;
    }
  }
  return d;
}

std::int32_t Dictionaries::word_index(std::string_view word) const {
  const auto it = word_to_index_.find(std::string(word));
  return it == word_to_index_.end() ? -1 : it->second;
}

std::int32_t Dictionaries::label_index(std::int64_t raw_label) const {
  const auto it = label_to_index_.find(raw_label);
  return it == label_to_index_.end() ? -1 : it->second;
}

std::vector<std::int32_t> Dictionaries::doc_token_indices(const TokenDoc& doc) const {
  std::vector<std::int32_t> out;
  out.reserve(doc.tokens.size());
  for (const std::string& token : doc.tokens) {
    const std::int32_t idx = word_index(token);
    if (idx >= 0) {
      out.push_back(idx);
    }
  }
  return out;
}

namespace {

void write_u32(std::ostream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

void write_i64(std::ostream& out, std::int64_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::uint32_t read_u32(std::istream& in) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw std::runtime_error("model file: truncated dictionary");
  return v;
}

std::int64_t read_i64(std::istream& in) {
  std::int64_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw std::runtime_error("model file: truncated dictionary");
  return v;
}

}  // namespace

void Dictionaries::save(std::ostream& out) const {
  write_u32(out, static_cast<std::uint32_t>(nwords()));
  for (std::int32_t i = 0; i < nwords(); i++) {
    write_u32(out, static_cast<std::uint32_t>(index_to_word_[i].size()));
    out.write(index_to_word_[i].data(),
              static_cast<std::streamsize>(index_to_word_[i].size()));
    write_i64(out, word_freqs_[i]);
  }
  write_u32(out, static_cast<std::uint32_t>(nlabels()));
  for (std::int32_t i = 0; i < nlabels(); i++) {
    write_i64(out, index_to_label_[i]);
    write_i64(out, label_freqs_[i]);
  }
}

Dictionaries Dictionaries::load(std::istream& in) {
  Dictionaries d;
  const std::uint32_t nwords = read_u32(in);
  d.index_to_word_.reserve(nwords);
  d.word_freqs_.reserve(nwords);
  for (std::uint32_t i = 0; i < nwords; i++) {
    std::string word(read_u32(in), '\0');
    in.read(word.data(), static_cast<std::streamsize>(word.size()));
    if (!in) throw std::runtime_error("model file: truncated dictionary");
    d.word_freqs_.push_back(read_i64(in));
    d.word_to_index_.emplace(word, static_cast<std::int32_t>(i));
    d.index_to_word_.push_back(std::move(word));
  }
  const std::uint32_t nlabels = read_u32(in);
  d.index_to_label_.reserve(nlabels);
  d.label_freqs_.reserve(nlabels);
  for (std::uint32_t i = 0; i < nlabels; i++) {
    const std::int64_t raw = read_i64(in);
    d.index_to_label_.push_back(raw);
    d.label_freqs_.push_back(read_i64(in));
    d.label_to_index_.emplace(raw, static_cast<std::int32_t>(i));
  }
  return d;
}

}  // namespace hscls
