// Brute-force reference computations for tests. Nothing here goes through
// the interval criterion, the segment enumerator or the closed forms.
#ifndef PROJLIN_TESTS_ORACLES_HPP_
#define PROJLIN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "projlin/arrangement.hpp"
#include "projlin/numeric.hpp"
#include "projlin/tree.hpp"

namespace projlin::oracle {

// Calls visit with every one of the n! position vectors.
inline void for_each_permutation(std::size_t n,
                                 const std::function<void(const std::vector<Position>&)>& visit) {
  std::vector<Position> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Position>(i + 1);
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Vertices reachable from v, by explicit depth-first search.
inline std::vector<Vertex> yield_of(const RootedTree& tree, Vertex v) {
  std::vector<Vertex> out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (Vertex c : tree.children(u)) stack.push_back(c);
  }
  return out;
}

// Yield of every vertex forms a contiguous set of positions.
inline bool projective(const RootedTree& tree, const std::vector<Position>& pos) {
  for (Vertex v = 1; v <= tree.size(); ++v) {
    std::vector<Position> ps;
    for (Vertex u : yield_of(tree, v)) ps.push_back(pos[u - 1]);
    std::sort(ps.begin(), ps.end());
    for (std::size_t i = 1; i < ps.size(); ++i) {
      if (ps[i] != ps[i - 1] + 1) return false;
    }
  }
  return true;
}

inline std::size_t crossings(const RootedTree& tree, const std::vector<Position>& pos) {
  std::vector<std::pair<Position, Position>> e;
  for (Vertex v = 1; v <= tree.size(); ++v) {
    if (auto p = tree.parent(v)) {
      e.emplace_back(std::min(pos[v - 1], pos[*p - 1]), std::max(pos[v - 1], pos[*p - 1]));
    }
  }
  std::size_t count = 0;
  for (auto [a, b] : e) {
    for (auto [c, d] : e) {
      if (a < c && c < b && b < d) ++count;
    }
  }
  return count;
}

// Some edge passes strictly over the root's position.
inline bool root_covered(const RootedTree& tree, const std::vector<Position>& pos) {
  const Position r = pos[tree.root() - 1];
  for (Vertex v = 1; v <= tree.size(); ++v) {
    if (auto p = tree.parent(v)) {
      const Position a = std::min(pos[v - 1], pos[*p - 1]);
      const Position b = std::max(pos[v - 1], pos[*p - 1]);
      if (a < r && r < b) return true;
    }
  }
  return false;
}

inline std::uint64_t edge_length_sum(const RootedTree& tree, const std::vector<Position>& pos) {
  std::uint64_t total = 0;
  for (Vertex v = 1; v <= tree.size(); ++v) {
    if (auto p = tree.parent(v)) {
      total += pos[v - 1] > pos[*p - 1] ? pos[v - 1] - pos[*p - 1] : pos[*p - 1] - pos[v - 1];
    }
  }
  return total;
}

struct ProjectiveStats {
  std::uint64_t count = 0;
  Rational mean_d;
};

// Scans all n! arrangements; feasible for n <= 8.
inline ProjectiveStats projective_stats(const RootedTree& tree) {
  ProjectiveStats stats;
  BigCount total = 0;
  for_each_permutation(tree.size(), [&](const std::vector<Position>& pos) {
    if (!projective(tree, pos)) return;
    ++stats.count;
    total += edge_length_sum(tree, pos);
  });
  stats.mean_d = Rational(total, stats.count);
  return stats;
}

// Unlabeled rooted trees on n vertices, deduplicated by canonical code,
// found by relabeling every head vector. Feasible for n <= 7.
inline std::set<std::string> rooted_tree_codes_by_head_vectors(std::size_t n) {
  std::set<std::string> codes;
  std::vector<Vertex> heads(n, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == n) {
      try {
        codes.insert(canonical_code(from_head_vector(heads)).str());
      } catch (...) {
      }
      return;
    }
    for (Vertex h = 0; h <= n; ++h) {
      if (h == i + 1) continue;
      heads[i] = h;
      fill(i + 1);
    }
  };
  fill(0);
  return codes;
}

}  // namespace projlin::oracle

#endif  // PROJLIN_TESTS_ORACLES_HPP_
