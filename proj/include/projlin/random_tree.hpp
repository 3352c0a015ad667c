#ifndef PROJLIN_RANDOM_TREE_HPP_
#define PROJLIN_RANDOM_TREE_HPP_

#include <cstddef>
#include <random>

#include "projlin/tree.hpp"

namespace projlin {

// Uniformly random labeled free tree (Pruefer decoding) rooted at a
// uniformly random vertex.
RootedTree random_labeled_tree(std::size_t n, std::mt19937_64& rng);

}  // namespace projlin

#endif  // PROJLIN_RANDOM_TREE_HPP_
