#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgeom/errors.hpp"
#include "qgeom/segre.hpp"
#include "qgeom/state.hpp"

namespace qgeom {

/// Binary tree of block Segre embeddings. A leaf stands for one input vector
/// (labelled 1..k) whose dimension is the product of its subsystem
/// dimensions; a join is the outer product of its two children with the left
/// child as the more significant block.
class PartitionNode {
 public:
  static PartitionNode leaf(std::size_t label, std::vector<std::size_t> dims = {2}) {
    if (label == 0) throw InputError("leaf labels start at 1");
    if (dims.empty()) throw InputError("leaf " + std::to_string(label) + " has no subsystem dimensions");
    std::size_t total = 1;
    for (std::size_t d : dims) {
      if (d < 2) throw InputError("leaf " + std::to_string(label) + " has a subsystem dimension below 2");
      total *= d;
    }
    PartitionNode node;
    node.label_ = label;
    node.dims_ = std::move(dims);
    node.dimension_ = total;
    node.leaves_ = 1;
    return node;
  }

  static PartitionNode join(PartitionNode left, PartitionNode right) {
    PartitionNode node;
    node.dimension_ = left.dimension_ * right.dimension_;
    node.leaves_ = left.leaves_ + right.leaves_;
    node.left_ = std::make_shared<const PartitionNode>(std::move(left));
    node.right_ = std::make_shared<const PartitionNode>(std::move(right));
    return node;
  }

  bool is_leaf() const noexcept { return left_ == nullptr; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t leaf_count() const noexcept { return leaves_; }
  std::size_t label() const noexcept { return label_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const PartitionNode& left() const { return *left_; }
  const PartitionNode& right() const { return *right_; }

  /// Leaf labels in left-to-right order.
  std::vector<std::size_t> leaf_labels() const {
    std::vector<std::size_t> out;
    collect_labels(out);
    return out;
  }

  std::string to_string() const {
    if (is_leaf()) return std::to_string(label_);
    return "(" + left_->to_string() + "," + right_->to_string() + ")";
  }

 private:
  PartitionNode() = default;

  void collect_labels(std::vector<std::size_t>& out) const {
    if (is_leaf()) {
      out.push_back(label_);
      return;
    }
    left_->collect_labels(out);
    right_->collect_labels(out);
  }

  std::size_t label_ = 0;
  std::vector<std::size_t> dims_;
  std::size_t dimension_ = 1;
  std::size_t leaves_ = 0;
  std::shared_ptr<const PartitionNode> left_;
  std::shared_ptr<const PartitionNode> right_;
};

namespace detail {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PartitionNode parse() {
    PartitionNode root = node();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  PartitionNode node() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      PartitionNode left = node();
      expect(',');
      PartitionNode right = node();
      expect(')');
      return PartitionNode::join(std::move(left), std::move(right));
    }
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected '(' or a leaf label");
    std::size_t label = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      label = label * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
      if (label > 1'000'000) fail("leaf label too large");
    }
    return PartitionNode::leaf(label);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("partition tree \"" + std::string(text_) + "\": " + what + " at column " +
                     std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::vector<PartitionNode> shapes_over(std::size_t first, std::size_t count) {
  if (count == 1) return {PartitionNode::leaf(first)};
  std::vector<PartitionNode> out;
  for (std::size_t split = 1; split < count; ++split) {
    for (const auto& left : shapes_over(first, split)) {
      for (const auto& right : shapes_over(first + split, count - split)) {
        out.push_back(PartitionNode::join(left, right));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Parses nested-parenthesis syntax such as "((1,2),(3,4))". Leaves are qubits.
inline PartitionNode parse_partition(std::string_view text) {
  PartitionNode tree = detail::TreeParser(text).parse();
  auto labels = tree.leaf_labels();
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw InputError("partition tree \"" + std::string(text) + "\" repeats a leaf label");
  }
  return tree;
}

/// Every binary tree over `leaves` qubit leaves labelled 1..k left to right
/// (Catalan-many shapes).
inline std::vector<PartitionNode> all_tree_shapes(std::size_t leaves) {
  if (leaves == 0) throw InputError("a partition tree needs at least one leaf");
  return detail::shapes_over(1, leaves);
}

/// Outer product with the left factor as the more significant block:
/// out[i * right.size() + j] = left[i] * right[j].
inline std::vector<Amplitude> block_segre(std::span<const Amplitude> left, std::span<const Amplitude> right) {
  auto is_zero = [](std::span<const Amplitude> v) {
    return std::all_of(v.begin(), v.end(), [](Amplitude a) { return a == Amplitude{}; });
  };
  if (left.empty() || right.empty()) throw InputError("block_segre needs nonempty vectors");
  if (is_zero(left) || is_zero(right)) throw DomainError("block_segre of a zero vector");
  std::vector<Amplitude> out(left.size() * right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) out[i * right.size() + j] = left[i] * right[j];
  }
  return out;
}

/// Applies the tree bottom-up. Leaf label j consumes leaf_vectors[j - 1],
/// whose length must equal that leaf's dimension.
inline std::vector<Amplitude> compose_blocks(const PartitionNode& tree,
                                             std::span<const std::vector<Amplitude>> leaf_vectors) {
  if (tree.leaf_count() != leaf_vectors.size()) {
    throw InputError("partition tree " + tree.to_string() + " has " + std::to_string(tree.leaf_count()) +
                     " leaves but " + std::to_string(leaf_vectors.size()) + " vectors were given");
  }
  // Labels index directly into the full vector list.
  struct Walker {
    std::span<const std::vector<Amplitude>> vectors;
    std::vector<Amplitude> operator()(const PartitionNode& node) const {
      if (node.is_leaf()) {
        if (node.label() > vectors.size()) {
          throw InputError("leaf label " + std::to_string(node.label()) + " exceeds the number of vectors");
        }
        const auto& v = vectors[node.label() - 1];
        if (v.size() != node.dimension()) {
          throw InputError("leaf " + std::to_string(node.label()) + " expects dimension " +
                           std::to_string(node.dimension()) + ", got " + std::to_string(v.size()));
        }
        return v;
      }
      const auto left = (*this)(node.left());
      const auto right = (*this)(node.right());
      return block_segre(left, right);
    }
  };
  return Walker{leaf_vectors}(tree);
}

/// Composes single-qubit factors through the tree. The result is not
/// rescaled; its norm is the product of the factor norms. With the leaves
/// read left to right it agrees with segre_embed(factors, false).
inline MultiQubitState compose_partition(const PartitionNode& tree, std::span<const SingleQubitFactor> factors) {
  std::vector<std::vector<Amplitude>> vectors;
  vectors.reserve(factors.size());
  for (const auto& f : factors) vectors.push_back({f.a0, f.a1});
  const auto labels = tree.leaf_labels();
  std::vector<std::size_t> sorted_labels(labels);
  std::sort(sorted_labels.begin(), sorted_labels.end());
  for (std::size_t i = 0; i < sorted_labels.size(); ++i) {
    if (sorted_labels[i] != i + 1) {
      throw InputError("partition tree " + tree.to_string() + " must label its leaves 1.." +
                       std::to_string(labels.size()) + " exactly once");
    }
  }
  if (tree.dimension() != (std::size_t{1} << tree.leaf_count())) {
    throw InputError("compose_partition needs qubit (dimension 2) leaves");
  }
  auto amplitudes = compose_blocks(tree, vectors);
  return MultiQubitState(static_cast<unsigned>(tree.leaf_count()), std::move(amplitudes));
}

/// The factors in the tree's left-to-right leaf order, i.e. the list whose
/// direct Segre embedding the tree composition should reproduce.
inline std::vector<SingleQubitFactor> factors_in_leaf_order(const PartitionNode& tree,
                                                            std::span<const SingleQubitFactor> factors) {
  std::vector<SingleQubitFactor> out;
  for (std::size_t label : tree.leaf_labels()) {
    if (label == 0 || label > factors.size()) throw InputError("leaf label " + std::to_string(label) + " out of range");
    out.push_back(factors[label - 1]);
  }
  return out;
}

}  // namespace qgeom
