#include "projlin/extrema.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "projlin/error.hpp"
#include "projlin/expectation.hpp"

namespace projlin {

namespace {

using boost::multiprecision::cpp_int;

// Cost of a root with `degree` children in an n-vertex tree, excluding the
// subtrees' own expectations.
Rational root_cost(std::size_t n, std::size_t degree) {
  return Rational(cpp_int(degree) * (2 * n + 1) + n - 1, 6);
}

// Partitions of `total` into exactly `parts` summands, non-increasing.
void for_each_partition(std::size_t total, std::size_t parts,
                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> current;
  current.reserve(parts);
  std::function<void(std::size_t, std::size_t, std::size_t)> extend =
      [&](std::size_t remaining, std::size_t left, std::size_t largest) {
        if (left == 0) {
          if (remaining == 0) visit(current);
          return;
        }
        // each of the `left` parts is between 1 and `largest`
        if (remaining < left || remaining > left * largest) return;
        const std::size_t top = std::min(largest, remaining - (left - 1));
        for (std::size_t part = top; part >= 1; --part) {
          current.push_back(part);
          extend(remaining - part, left - 1, part);
          current.pop_back();
        }
      };
  extend(total, parts, total);
}

void solve(std::size_t n, MemoTable& memo) {
  if (memo.contains(n)) return;

  OptimumEntry entry;
  entry.n = n;
  if (n <= 2) {
    std::vector<Vertex> heads(n, 1);
    heads[0] = 0;
    entry.value = expected_D_projective(from_head_vector(heads));
    entry.trees.push_back(std::move(heads));
    memo.store(std::move(entry));
    return;
  }

  Rational best = expected_D_unconstrained(n);
  std::vector<std::vector<Vertex>> winners;
  std::unordered_set<std::string> winner_codes;

  for (std::size_t degree = 1; degree <= n - 1; ++degree) {
    const Rational base = root_cost(n, degree);
    for_each_partition(n - 1, degree, [&](const std::vector<std::size_t>& parts) {
      Rational cost = base;
      for (std::size_t part : parts) {
        solve(part, memo);
        cost += memo.at(part).value;
        if (cost > best) return;
      }

      std::vector<std::vector<RootedTree>> lists;
      lists.reserve(parts.size());
      for (std::size_t part : parts) lists.push_back(memo.at(part).materialize());

      if (cost < best) {
        best = cost;
        winners.clear();
        winner_codes.clear();
      }
      for (const RootedTree& tree : combine_forests(parts, lists)) {
        if (winner_codes.insert(canonical_code(tree).str()).second) {
          winners.push_back(canonical_head_vector(tree));
        }
      }
    });
  }

  std::sort(winners.begin(), winners.end());
  entry.value = best;
  entry.trees = std::move(winners);
  memo.store(std::move(entry));
}

}  // namespace

MaximumResult max_expected(std::size_t n) {
  return {expected_D_unconstrained(n), make_class(TreeClass::kStarHub, n)};
}

std::vector<RootedTree> OptimumEntry::materialize() const {
  std::vector<RootedTree> out;
  out.reserve(trees.size());
  for (const auto& heads : trees) out.push_back(from_head_vector(heads));
  return out;
}

const OptimumEntry& min_expected(std::size_t n, MemoTable& memo, std::size_t cap) {
  if (n < 1) throw Error(ErrorKind::kUnsupportedSize, "a tree needs at least one vertex");
  if (n > cap) {
    throw Error(ErrorKind::kCapExceeded, "minima requested for n = " + std::to_string(n) +
                                             " above the cap of " + std::to_string(cap));
  }
  solve(n, memo);
  return memo.at(n);
}

std::vector<RootedTree> combine_forests(std::span<const std::size_t> part_sizes,
                                        std::span<const std::vector<RootedTree>> per_part_trees) {
  if (part_sizes.size() != per_part_trees.size()) {
    throw Error(ErrorKind::kSizeMismatch, "one tree list is needed per part");
  }
  std::size_t n = 1;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    for (const RootedTree& t : per_part_trees[i]) {
      if (t.size() != part_sizes[i]) {
        throw Error(ErrorKind::kSizeMismatch, "tree of size " + std::to_string(t.size()) +
                                                  " listed for a part of size " +
                                                  std::to_string(part_sizes[i]));
      }
    }
    n += part_sizes[i];
  }

  std::vector<std::vector<std::vector<Vertex>>> heads(part_sizes.size());
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    for (const RootedTree& t : per_part_trees[i]) heads[i].push_back(to_head_vector(t));
  }

  std::vector<RootedTree> out;
  std::vector<std::size_t> pick(part_sizes.size(), 0);
  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (i == part_sizes.size()) {
      std::vector<Vertex> forest(n, 0);
      Vertex offset = 1;
      for (std::size_t j = 0; j < part_sizes.size(); ++j) {
        const auto& h = heads[j][pick[j]];
        for (std::size_t v = 0; v < h.size(); ++v) {
          forest[offset + v] = h[v] == 0 ? 1 : offset + h[v];
        }
        offset += static_cast<Vertex>(h.size());
      }
      out.push_back(from_head_vector(forest));
      return;
    }
    const bool tied = i > 0 && part_sizes[i] == part_sizes[i - 1];
    for (std::size_t j = tied ? pick[i - 1] : 0; j < heads[i].size(); ++j) {
      pick[i] = j;
      choose(i + 1);
    }
  };
  choose(0);
  return out;
}

void for_each_rooted_tree(std::size_t n, const std::function<void(const RootedTree&)>& visit,
                          std::size_t cap) {
  if (n < 1) throw Error(ErrorKind::kUnsupportedSize, "a tree needs at least one vertex");
  if (n > cap) {
    throw Error(ErrorKind::kCapExceeded, "rooted tree enumeration requested for n = " +
                                             std::to_string(n) + " above the cap of " +
                                             std::to_string(cap));
  }
  // Level sequences in reverse lexicographic order, starting from the path.
  std::vector<std::size_t> level(n);
  for (std::size_t i = 0; i < n; ++i) level[i] = i;
  std::vector<Vertex> heads(n);
  std::vector<Vertex> last_at_level(n + 1, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      heads[i] = level[i] == 0 ? 0 : last_at_level[level[i] - 1];
      last_at_level[level[i]] = static_cast<Vertex>(i + 1);
    }
    visit(from_head_vector(heads));

    std::size_t p = n;
    for (std::size_t i = n; i-- > 0;) {
      if (level[i] > 1) {
        p = i;
        break;
      }
    }
    if (p == n) return;
    std::size_t q = p;
    while (level[--q] != level[p] - 1) {
    }
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - p + q];
  }
}

std::vector<RootedTree> enumerate_rooted_trees(std::size_t n, std::size_t cap) {
  std::vector<RootedTree> out;
  for_each_rooted_tree(n, [&](const RootedTree& t) { out.push_back(t); }, cap);
  return out;
}

}  // namespace projlin
