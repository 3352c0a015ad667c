#ifndef PROJLIN_EXTREMA_HPP_
#define PROJLIN_EXTREMA_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "projlin/numeric.hpp"
#include "projlin/tree.hpp"

namespace projlin {

struct MaximumResult {
  Rational value;
  RootedTree tree;
};

// (n^2 - 1)/3, attained only by the star rooted at its hub when n >= 3.
MaximumResult max_expected(std::size_t n);

// Minimum expectation for one size with every minimizing tree up to
// isomorphism, kept as canonical head vectors sorted lexicographically.
struct OptimumEntry {
  std::size_t n = 0;
  Rational value;
  std::vector<std::vector<Vertex>> trees;

  std::vector<RootedTree> materialize() const;
};

class MemoTable {
 public:
  bool contains(std::size_t n) const { return entries_.contains(n); }
  const OptimumEntry& at(std::size_t n) const { return entries_.at(n); }
  void store(OptimumEntry entry) { entries_[entry.n] = std::move(entry); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::size_t, OptimumEntry> entries_;
};

inline constexpr std::size_t kDefaultMinimaCap = 20;

// Dynamic program over root degree and partitions of n - 1 into that many
// parts (non-increasing), abandoning a partition as soon as its partial cost
// exceeds the incumbent. Fills `memo` for every size it touches.
// Throws CapExceeded when n > cap.
const OptimumEntry& min_expected(std::size_t n, MemoTable& memo,
                                 std::size_t cap = kDefaultMinimaCap);

// Hangs every forest of the product per_part_trees[0] x ... under a new root
// (vertex 1). Adjacent equal part sizes pick non-decreasing indices, so no
// two outputs are isomorphic provided equal sizes share the same list.
std::vector<RootedTree> combine_forests(std::span<const std::size_t> part_sizes,
                                        std::span<const std::vector<RootedTree>> per_part_trees);

inline constexpr std::size_t kDefaultRootedTreeCap = 10;

// Every unlabeled rooted tree on n vertices exactly once, generated from
// canonical level sequences. Throws CapExceeded when n > cap.
void for_each_rooted_tree(std::size_t n, const std::function<void(const RootedTree&)>& visit,
                          std::size_t cap = kDefaultRootedTreeCap);
std::vector<RootedTree> enumerate_rooted_trees(std::size_t n,
                                               std::size_t cap = kDefaultRootedTreeCap);

}  // namespace projlin

#endif  // PROJLIN_EXTREMA_HPP_
