#include "hscls/huffman.h"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hscls {

HuffmanTree build_huffman_tree(const std::vector<std::int64_t>& label_freqs) {
  const std::int32_t leaves = static_cast<std::int32_t>(label_freqs.size());
  if (leaves == 0) {
    throw std::invalid_argument("cannot build a Huffman tree over zero labels");
  }

  HuffmanTree tree;
  tree.leaf_count_ = leaves;
  tree.paths_.resize(leaves);
  if (leaves == 1) {
    return tree;  // single leaf, no internal nodes, empty path
  }

  // Two-queue construction. Leaves sorted by (weight, label) feed queue one;
  // merged nodes land in queue two in non-decreasing weight order. Ties pop
  // from queue one first, which is exactly earliest-creation order.
  struct Item {
    std::int64_t weight;
    std::int32_t id;  // combined id: internal < leaves-1, leaf >= leaves-1
  };
  std::vector<Item> sorted_leaves(leaves);
  for (std::int32_t i = 0; i < leaves; i++) {
    sorted_leaves[i] = {std::max<std::int64_t>(label_freqs[i], 1),
                        (leaves - 1) + i};
  }
  std::stable_sort(sorted_leaves.begin(), sorted_leaves.end(),
                   [leaves](const Item& a, const Item& b) {
                     if (a.weight != b.weight) return a.weight < b.weight;
                     return a.id < b.id;
                   });

  std::deque<Item> leaf_queue(sorted_leaves.begin(), sorted_leaves.end());
  std::deque<Item> merge_queue;
  const auto pop_min = [&]() {
    if (merge_queue.empty() ||
        (!leaf_queue.empty() && leaf_queue.front().weight <= merge_queue.front().weight)) {
      const Item item = leaf_queue.front();
      leaf_queue.pop_front();
      return item;
    }
    const Item item = merge_queue.front();
    merge_queue.pop_front();
    return item;
  };

  tree.nodes_.reserve(leaves - 1);
  std::vector<std::int32_t> parent(2 * leaves - 1, -1);
  std::vector<bool> is_left_child(2 * leaves - 1, false);
  // min_label_of is unusable mid-build: the leaf-id offset assumes the final
  // internal count.
  const auto min_label = [&](std::int32_t id) {
    return id >= leaves - 1 ? id - (leaves - 1) : tree.nodes_[id].min_label;
  };
  while (leaf_queue.size() + merge_queue.size() >= 2) {
    const Item left = pop_min();
    const Item right = pop_min();
    const std::int32_t id = static_cast<std::int32_t>(tree.nodes_.size());
    tree.nodes_.push_back({left.id, right.id,
                           std::min(min_label(left.id), min_label(right.id))});
    parent[left.id] = id;
    is_left_child[left.id] = true;
    parent[right.id] = id;
    merge_queue.push_back({left.weight + right.weight, id});
  }

  for (std::int32_t label = 0; label < leaves; label++) {
    std::vector<PathStep>& path = tree.paths_[label];
    std::int32_t id = tree.leaf_id(label);
    while (parent[id] != -1) {
      path.push_back({parent[id], is_left_child[id]});
      id = parent[id];
    }
    std::reverse(path.begin(), path.end());
  }
  return tree;
}

std::int64_t HuffmanTree::weighted_path_length(const std::vector<std::int64_t>& freqs) const {
  std::int64_t total = 0;
  for (std::int32_t label = 0; label < leaf_count_; label++) {
    total += freqs[label] * static_cast<std::int64_t>(paths_[label].size());
  }
  return total;
}

namespace {

void write_i32(std::ostream& out, std::int32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::int32_t read_i32(std::istream& in) {
  std::int32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw std::runtime_error("model file: truncated tree");
  return v;
}

}  // namespace

void HuffmanTree::save(std::ostream& out) const {
  write_i32(out, leaf_count_);
  write_i32(out, internal_count());
  for (const InternalNode& n : nodes_) {
    write_i32(out, n.left);
    write_i32(out, n.right);
  }
  for (const std::vector<PathStep>& path : paths_) {
    write_i32(out, static_cast<std::int32_t>(path.size()));
    for (const PathStep& step : path) {
      write_i32(out, step.node);
      out.put(step.left ? 1 : 0);
    }
  }
}

HuffmanTree HuffmanTree::load(std::istream& in) {
  HuffmanTree tree;
  tree.leaf_count_ = read_i32(in);
  const std::int32_t internals = read_i32(in);
  if (tree.leaf_count_ < 1 || internals != tree.leaf_count_ - 1) {
    throw std::runtime_error("model file: corrupt tree header");
  }
  tree.nodes_.resize(internals);
  for (InternalNode& n : tree.nodes_) {
    n.left = read_i32(in);
    n.right = read_i32(in);
  }
  // Children are created before their parent, so ids ascend child-first.
  for (std::int32_t id = 0; id < internals; id++) {
    InternalNode& n = tree.nodes_[id];
    n.min_label = std::min(tree.min_label_of(n.left), tree.min_label_of(n.right));
  }
  tree.paths_.resize(tree.leaf_count_);
  for (std::vector<PathStep>& path : tree.paths_) {
    path.resize(read_i32(in));
    for (PathStep& step : path) {
      step.node = read_i32(in);
      step.left = in.get() == 1;
      if (!in) throw std::runtime_error("model file: truncated tree");
    }
  }
  return tree;
}

}  // namespace hscls
