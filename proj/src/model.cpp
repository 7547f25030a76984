#include "hscls/model.h"

#include <fstream>
#include <stdexcept>

#include "hscls/hierarchical.h"
#include "hscls/softmax.h"

namespace hscls {

const char* loss_mode_name(LossMode mode) {
  return mode == LossMode::softmax ? "softmax" : "hs";
}

LossMode loss_mode_from_name(std::string_view name) {
  if (name == "softmax") return LossMode::softmax;
  if (name == "hs") return LossMode::hs;
  throw std::invalid_argument("unknown loss '" + std::string(name) +
                              "' (expected hs or softmax)");
}

ModelParams init_params(std::int64_t vocab, std::int64_t labels, std::int32_t dim,
                        LossMode mode, std::uint64_t seed) {
  if (dim < 1) {
    throw std::invalid_argument("dim must be >= 1");
  }
  ModelParams params;
  params.dim = dim;
  params.input = Matrix(vocab, dim);
  Rng rng(seed);
  params.input.uniform(1.0 / static_cast<real>(dim), rng);
  const std::int64_t output_rows = mode == LossMode::softmax ? labels : labels - 1;
  params.output = Matrix(std::max<std::int64_t>(output_rows, 0), dim);
  return params;
}

void compute_hidden(std::span<const std::int32_t> doc_tokens, const ModelParams& params,
                    Vector& h) {
  if (doc_tokens.empty()) {
    throw std::invalid_argument("empty document");
  }
  h.zero();
  for (std::int32_t token : doc_tokens) {
    h.add_row(params.input, token);
  }
  h.mul(1.0 / static_cast<real>(doc_tokens.size()));
}

std::vector<std::pair<std::int32_t, real>> Model::predict(const Vector& h,
                                                          std::int32_t k) const {
  if (mode == LossMode::softmax) {
    return softmax_top_k(h, params, k);
  }
  return predict_top_k(h, tree, params, k);
}

namespace {

constexpr std::uint32_t kMagic = 0x4853434C;  // "HSCL"
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::uint32_t read_u32(std::istream& in) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw std::runtime_error("model file: truncated header");
  return v;
}

}  // namespace

void Model::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error(path + " cannot be opened for saving");
  }
  write_u32(out, kMagic);
  write_u32(out, kVersion);
  out.put(static_cast<char>(mode));
  write_u32(out, static_cast<std::uint32_t>(params.dim));
  dicts.save(out);
  params.input.save(out);
  params.output.save(out);
  if (mode == LossMode::hs) {
    tree.save(out);
  }
  if (!out) {
    throw std::runtime_error(path + ": write failed");
  }
}

Model Model::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error(path + " cannot be opened for reading");
  }
  if (read_u32(in) != kMagic) {
    throw std::runtime_error(path + " is not a hscls model file");
  }
  const std::uint32_t version = read_u32(in);
  if (version != kVersion) {
    throw std::runtime_error(path + ": unsupported model version " +
                             std::to_string(version) + " (expected " +
                             std::to_string(kVersion) + ")");
  }
  Model model;
  const int mode_byte = in.get();
  if (mode_byte != 0 && mode_byte != 1) {
    throw std::runtime_error(path + ": corrupt loss mode");
  }
  model.mode = static_cast<LossMode>(mode_byte);
  model.params.dim = static_cast<std::int32_t>(read_u32(in));
  model.dicts = Dictionaries::load(in);
  model.params.input = Matrix::load(in);
  model.params.output = Matrix::load(in);
  if (model.mode == LossMode::hs) {
    model.tree = HuffmanTree::load(in);
  }
  return model;
}

}  // namespace hscls
