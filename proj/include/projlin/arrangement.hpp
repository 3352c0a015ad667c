#ifndef PROJLIN_ARRANGEMENT_HPP_
#define PROJLIN_ARRANGEMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "projlin/numeric.hpp"
#include "projlin/tree.hpp"

namespace projlin {

using Position = std::uint32_t;

// Bijection between vertices 1..n and positions 1..n.
class LinearArrangement {
 public:
  LinearArrangement() = default;

  static LinearArrangement identity(std::size_t n);
  // position_of[v - 1] is the position of vertex v.
  static LinearArrangement from_positions(std::vector<Position> position_of);
  // vertex_at[p - 1] is the vertex at position p.
  static LinearArrangement from_order(std::vector<Vertex> vertex_at);

  std::size_t size() const { return position_.size(); }
  Position position(Vertex v) const { return position_[v - 1]; }
  Vertex vertex_at(Position p) const { return vertex_[p - 1]; }
  std::span<const Position> positions() const { return position_; }
  std::span<const Vertex> order() const { return vertex_; }

  // pos'(v) = n + 1 - pos(v)
  LinearArrangement reversed() const;

  friend bool operator==(const LinearArrangement& a, const LinearArrangement& b) {
    return a.position_ == b.position_;
  }

 private:
  std::vector<Position> position_;
  std::vector<Vertex> vertex_;
};

// Inverse permutation, vertex ids by position, separated by single spaces.
std::string format_arrangement(const LinearArrangement& arrangement);
LinearArrangement parse_arrangement(std::string_view text);

enum class LengthVariant {
  kStandard,  // |pos(u) - pos(v)|
  kMinusOne,  // |pos(u) - pos(v)| - 1
};

std::uint64_t sum_edge_lengths(const RootedTree& tree, const LinearArrangement& arrangement,
                               LengthVariant variant = LengthVariant::kStandard);

// Every subtree occupies an interval of consecutive positions.
bool is_projective(const RootedTree& tree, const LinearArrangement& arrangement);

// No two edges cross; coverage of the root is not considered. Quadratic in n.
bool is_planar(const RootedTree& tree, const LinearArrangement& arrangement);

// Product over vertices of (out_degree + 1)!.
BigCount count_projective(const RootedTree& tree);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Streams every projective arrangement exactly once. Each vertex owns a
// permutation of its segments (itself followed by its children); the
// permutations advance like an odometer with the root as the most
// significant digit, each in lexicographic order.
class ProjectiveEnumerator {
 public:
  // Throws CapExceeded when count_projective(tree) > cap.
  explicit ProjectiveEnumerator(const RootedTree& tree,
                                std::uint64_t cap = kDefaultEnumerationCap);

  bool next(LinearArrangement& out);

  std::uint64_t total() const { return total_; }

 private:
  void place(std::vector<Position>& position_of) const;
  bool advance();

  const RootedTree* tree_;
  std::vector<std::size_t> subtree_size_;
  std::vector<Vertex> movable_;  // vertices with children, top-down order
  std::vector<std::vector<std::uint32_t>> permutation_;  // per vertex - 1
  std::uint64_t total_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<LinearArrangement> enumerate_projective(
    const RootedTree& tree, std::uint64_t cap = kDefaultEnumerationCap);

// Draws uniformly random projective arrangements by shuffling every vertex's
// segments with Fisher-Yates and laying the segments out top-down.
class ProjectiveSampler {
 public:
  explicit ProjectiveSampler(const RootedTree& tree);

  LinearArrangement sample(std::mt19937_64& rng);

  // Sum of edge lengths of a fresh sample, without materializing it.
  std::uint64_t sample_sum_edge_lengths(std::mt19937_64& rng);

 private:
  void draw(std::mt19937_64& rng);

  const RootedTree* tree_;
  std::vector<std::size_t> subtree_size_;
  std::vector<std::size_t> segment_offset_;  // n + 1 offsets
  std::vector<Vertex> segments_;
  std::vector<Position> position_;
  std::vector<std::pair<Vertex, Position>> stack_;
};

LinearArrangement sample_projective(const RootedTree& tree, std::uint64_t seed);

}  // namespace projlin

#endif  // PROJLIN_ARRANGEMENT_HPP_
