#include "hscls/hierarchical.h"

#include <algorithm>
#include <cmath>
#include <queue>

#include "hscls/kernels.h"

namespace hscls {

real sigmoid(real x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const real e = std::exp(x);
  return e / (1.0 + e);
}

real log_sigmoid_neg(real x) {
  // -log sigma(x) = log(1 + exp(-x))
  if (x > 0.0) {
    return std::log1p(std::exp(-x));
  }
  return -x + std::log1p(std::exp(x));
}

real step_probability(std::span<const real> node_vec, const Vector& h, bool left) {
  const real score = kernels::active().dot(node_vec.data(), h.data(), node_vec.size());
  return sigmoid(left ? score : -score);
}

namespace {

real path_score(const Vector& h, const ModelParams& params, std::int32_t node) {
  return params.output.dot_row(h, node);
}

}  // namespace

real leaf_probability(const Vector& h, std::int32_t leaf, const HuffmanTree& tree,
                      const ModelParams& params) {
  if (leaf < 0 || leaf >= tree.leaf_count()) {
    throw std::out_of_range("unknown leaf " + std::to_string(leaf));
  }
  real p = 1.0;
  for (const PathStep& step : tree.path(leaf)) {
    p *= sigmoid(step.sign() * path_score(h, params, step.node));
  }
  return p;
}

std::vector<real> full_distribution(const Vector& h, const HuffmanTree& tree,
                                    const ModelParams& params) {
  std::vector<real> probs(static_cast<std::size_t>(tree.leaf_count()));
  for (std::int32_t leaf = 0; leaf < tree.leaf_count(); leaf++) {
    probs[leaf] = leaf_probability(h, leaf, tree, params);
  }
  return probs;
}

LossGrad hs_loss_grad(const Vector& h, std::int32_t gold, const HuffmanTree& tree,
                      const ModelParams& params) {
  const std::vector<PathStep>& path = tree.path(gold);
  LossGrad out{0.0, Vector(params.dim), {}};
  out.rows.reserve(path.size());
  for (const PathStep& step : path) {
    const real score = path_score(h, params, step.node);
    out.loss += log_sigmoid_neg(step.sign() * score);
    // d loss / d score = sigma(score) - t, t = 1 on left steps
    const real coeff = sigmoid(score) - (step.left ? 1.0 : 0.0);
    out.rows.push_back({step.node, coeff});
    out.grad_h.add_row(params.output, step.node, coeff);
  }
  return out;
}

std::vector<std::pair<std::int32_t, real>> predict_top_k(const Vector& h,
                                                         const HuffmanTree& tree,
                                                         const ModelParams& params,
                                                         std::int32_t k) {
  std::vector<std::pair<std::int32_t, real>> out;
  const std::int32_t want =
      std::min(k, tree.leaf_count());
  if (want <= 0) {
    return out;
  }
  if (tree.leaf_count() == 1) {
    out.push_back({0, 1.0});
    return out;
  }

  struct Frontier {
    real log_p;
    std::int32_t id;         // combined node id
    std::int32_t min_label;  // deterministic order among exact ties
  };
  const auto worse = [](const Frontier& a, const Frontier& b) {
    if (a.log_p != b.log_p) return a.log_p < b.log_p;
    return a.min_label > b.min_label;
  };
  std::priority_queue<Frontier, std::vector<Frontier>, decltype(worse)> frontier(worse);
  frontier.push({0.0, tree.root_id(), tree.min_label_of(tree.root_id())});

  while (!frontier.empty() && static_cast<std::int32_t>(out.size()) < want) {
    const Frontier top = frontier.top();
    frontier.pop();
    if (tree.is_leaf_id(top.id)) {
      out.push_back({tree.leaf_label(top.id), std::exp(top.log_p)});
      continue;
    }
    const HuffmanTree::InternalNode& node = tree.node(top.id);
    const real score = path_score(h, params, top.id);
    frontier.push({top.log_p - log_sigmoid_neg(score), node.left,
                   tree.min_label_of(node.left)});
    frontier.push({top.log_p - log_sigmoid_neg(-score), node.right,
                   tree.min_label_of(node.right)});
  }
  return out;
}

}  // namespace hscls
