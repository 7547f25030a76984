#pragma once

#include <span>
#include <vector>

#include "hscls/model.h"

namespace hscls {

// Overflow-safe logistic function, exact (no table approximation).
real sigmoid(real x);

// -log sigmoid(x) without underflow for large |x|.
real log_sigmoid_neg(real x);

// Probability of taking `left` at a node whose vector is node_vec:
// sigma(v'.h) left, sigma(-v'.h) right. The two directions sum to 1 exactly.
real step_probability(std::span<const real> node_vec, const Vector& h, bool left);

// Product of the per-step probabilities along the leaf's root path; 1 when
// the tree has a single leaf.
real leaf_probability(const Vector& h, std::int32_t leaf, const HuffmanTree& tree,
                      const ModelParams& params);

// Probabilities of all V leaves; sums to 1 (the tree factorization is a
// proper distribution).
std::vector<real> full_distribution(const Vector& h, const HuffmanTree& tree,
                                    const ModelParams& params);

// Loss -log p(gold) and gradients; touches exactly the path's node rows.
LossGrad hs_loss_grad(const Vector& h, std::int32_t gold, const HuffmanTree& tree,
                      const ModelParams& params);

// Exact top-k by best-first search over partial path products. Log
// probabilities only decrease along a path, so a popped leaf is final.
std::vector<std::pair<std::int32_t, real>> predict_top_k(const Vector& h,
                                                         const HuffmanTree& tree,
                                                         const ModelParams& params,
                                                         std::int32_t k);

}  // namespace hscls
