#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hscls/real.h"

namespace hscls {

// One step on a root-to-leaf path: the internal node whose vector scores the
// decision, and whether the path continues to its left child. Left carries
// sign +1, right -1.
struct PathStep {
  std::int32_t node = 0;
  bool left = false;

  real sign() const { return left ? 1.0 : -1.0; }

  bool operator==(const PathStep&) const = default;
};

// Binary Huffman tree over label indices [0, V). Internal node ids are dense
// in [0, V-1), assigned in merge-creation order, so the root is the last id.
// Child links use a combined id space: ids below V-1 are internal nodes, ids
// at or above V-1 encode leaf V-1+label.
class HuffmanTree {
 public:
  struct InternalNode {
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::int32_t min_label = 0;  // smallest leaf label in this subtree
  };

  std::int32_t leaf_count() const { return leaf_count_; }
  std::int32_t internal_count() const { return static_cast<std::int32_t>(nodes_.size()); }

  bool is_leaf_id(std::int32_t id) const { return id >= internal_count(); }
  std::int32_t leaf_label(std::int32_t id) const { return id - internal_count(); }
  std::int32_t leaf_id(std::int32_t label) const { return internal_count() + label; }

  // Combined id of the root; the leaf itself when V == 1.
  std::int32_t root_id() const {
    return nodes_.empty() ? leaf_id(0) : internal_count() - 1;
  }

  const InternalNode& node(std::int32_t id) const { return nodes_[id]; }
  std::int32_t min_label_of(std::int32_t id) const {
    return is_leaf_id(id) ? leaf_label(id) : nodes_[id].min_label;
  }

  // Root-first path of internal nodes for a leaf; length L(w)-1.
  const std::vector<PathStep>& path(std::int32_t label) const { return paths_[label]; }

  // Sum over leaves of freq * path length; the quantity Huffman minimizes.
  std::int64_t weighted_path_length(const std::vector<std::int64_t>& freqs) const;

  void save(std::ostream& out) const;
  static HuffmanTree load(std::istream& in);

  friend HuffmanTree build_huffman_tree(const std::vector<std::int64_t>& label_freqs);

 private:
  std::int32_t leaf_count_ = 0;
  std::vector<InternalNode> nodes_;
  std::vector<std::vector<PathStep>> paths_;
};

// Builds the frequency-optimal prefix tree. Zero counts are lifted to 1 so
// every label stays representable. Deterministic: among equal weights the
// earliest-created node is merged first (all leaves predate all internal
// nodes; leaves are created in label order), and the first-popped node
// becomes the left child.
HuffmanTree build_huffman_tree(const std::vector<std::int64_t>& label_freqs);

}  // namespace hscls
