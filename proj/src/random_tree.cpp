#include "projlin/random_tree.hpp"

#include <vector>

#include "projlin/error.hpp"

namespace projlin {

RootedTree random_labeled_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw Error(ErrorKind::kUnsupportedSize, "a tree needs at least one vertex");
  std::uniform_int_distribution<Vertex> pick(1, static_cast<Vertex>(n));
  const Vertex root = pick(rng);
  if (n == 1) return build_tree(1, {}, 1);

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  if (n == 2) {
    edges.emplace_back(1, 2);
    return build_from_edges(n, edges, root);
  }

  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> degree(n + 1, 1);
  for (Vertex c : code) ++degree[c];

  // Linear-time decoding: `leaf` is the smallest current leaf.
  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex c : code) {
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, static_cast<Vertex>(n));
  return build_from_edges(n, edges, root);
}

}  // namespace projlin
