#ifndef PROJLIN_TREE_HPP_
#define PROJLIN_TREE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace projlin {

// Vertices are numbered 1..n, matching arrangement positions and CoNLL-U ids.
using Vertex = std::uint32_t;

struct ParentLink {
  Vertex child;
  Vertex parent;
};

// A directed tree with edges oriented away from the root. Immutable once
// built; children keep the order in which their links were supplied.
class RootedTree {
 public:
  std::size_t size() const { return parent_.size(); }
  Vertex root() const { return root_; }

  std::span<const Vertex> children(Vertex v) const {
    return {child_list_.data() + child_offset_[v - 1],
            child_list_.data() + child_offset_[v]};
  }
  std::size_t out_degree(Vertex v) const {
    return child_offset_[v] - child_offset_[v - 1];
  }
  std::optional<Vertex> parent(Vertex v) const {
    if (parent_[v - 1] == 0) return std::nullopt;
    return parent_[v - 1];
  }

  // Breadth-first order from the root: every parent precedes its children.
  std::span<const Vertex> top_down_order() const { return order_; }

 private:
  friend RootedTree build_tree(std::size_t n, std::span<const ParentLink> links,
                               Vertex root);

  Vertex root_ = 1;
  std::vector<Vertex> parent_;            // 0 for the root
  std::vector<std::size_t> child_offset_;  // n + 1 offsets into child_list_
  std::vector<Vertex> child_list_;
  std::vector<Vertex> order_;
};

// Validates single-headedness, acyclicity and connectedness.
// Throws Error with kind CycleDetected, MultipleHeads, Disconnected, BadRoot
// or InvalidVertex.
RootedTree build_tree(std::size_t n, std::span<const ParentLink> links, Vertex root);

// Orients an undirected edge list away from `root`.
RootedTree build_from_edges(std::size_t n,
                            std::span<const std::pair<Vertex, Vertex>> edges,
                            Vertex root);

// Head vector: entry i holds the parent of vertex i + 1, 0 marks the root.
RootedTree from_head_vector(std::span<const Vertex> heads);
std::vector<Vertex> to_head_vector(const RootedTree& tree);
std::vector<Vertex> parse_head_vector(std::string_view text);
std::string format_head_vector(std::span<const Vertex> heads);

// Per-vertex values, indexed by vertex - 1.
struct SubtreeMetrics {
  std::vector<std::size_t> size;
  std::vector<std::size_t> out_degree;

  std::size_t subtree_size(Vertex v) const { return size[v - 1]; }
  std::size_t degree(Vertex v) const { return out_degree[v - 1]; }
};

SubtreeMetrics compute_metrics(const RootedTree& tree);

// AHU-style encoding of the unlabeled rooted tree: equal iff isomorphic.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& str() const { return bytes_; }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a,
                                          const CanonicalCode& b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::string bytes_;
};

CanonicalCode canonical_code(const RootedTree& tree);

// Head vector of the tree relabeled in preorder with children sorted by code.
// Isomorphic trees map to the same vector.
std::vector<Vertex> canonical_head_vector(const RootedTree& tree);

enum class TreeClass {
  kStarHub,
  kStarLeaf,
  kQuasiStarHub,
  kQuasiStarHubLeaf,   // leaf adjacent to the hub
  kQuasiStarFarLeaf,   // the leaf not adjacent to the hub
  kQuasiStarBridge,    // the internal vertex that is not the hub
  kLinear,
};

std::string_view tree_class_name(TreeClass cls);
std::optional<TreeClass> parse_tree_class(std::string_view name);

// Offset of the root from the nearest path end: min(k, n - 1 - k).
// Throws UnsupportedSize when k > n - 1.
std::size_t normalize_linear_offset(std::size_t n, std::size_t k);

// Throws UnsupportedSize when the class is undefined for n.
RootedTree make_class(TreeClass cls, std::size_t n, std::size_t k = 0);

}  // namespace projlin

template <>
struct std::hash<projlin::CanonicalCode> {
  std::size_t operator()(const projlin::CanonicalCode& code) const noexcept {
    return std::hash<std::string>{}(code.str());
  }
};

#endif  // PROJLIN_TREE_HPP_
