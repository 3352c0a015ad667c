#ifndef PROJLIN_EXPECTATION_HPP_
#define PROJLIN_EXPECTATION_HPP_

#include <cstddef>

#include "projlin/numeric.hpp"
#include "projlin/tree.hpp"

namespace projlin {

// Expected sum of edge lengths over all n! arrangements: (n^2 - 1)/3.
Rational expected_D_unconstrained(std::size_t n);

// Probability that the two endpoints of an edge sit at distance d in a
// uniformly random unconstrained arrangement: 2(n - d) / (n(n - 1)).
Rational edge_length_probability(std::size_t n, std::size_t d);

// Expected part of a root-to-child edge inside the child's segment.
Rational expected_anchor(std::size_t subtree_size);

// Expected part of a root-to-child edge spent crossing the other segments,
// (n - n_u - 1)/3 for a tree of n vertices and a child subtree of n_u.
Rational expected_coanchor(std::size_t n, std::size_t subtree_size);

// Anchor plus coanchor: (2n + n_u + 1)/6.
Rational expected_root_edge(std::size_t n, std::size_t subtree_size);

enum class ExpectationMethod {
  kClosedForm,  // one pass over (subtree size, out-degree) pairs
  kRecurrence,  // bottom-up over the root's immediate subtrees
};

// Expected sum of edge lengths over uniformly random projective arrangements.
// O(n) time and space.
Rational expected_D_projective(const RootedTree& tree,
                               ExpectationMethod method = ExpectationMethod::kClosedForm);
Rational expected_D_projective(const RootedTree& tree, const SubtreeMetrics& metrics,
                               ExpectationMethod method = ExpectationMethod::kClosedForm);

// Same expectation with edge lengths counted as |pos(u) - pos(v)| - 1.
Rational expected_Dprime_projective(const RootedTree& tree,
                                    ExpectationMethod method = ExpectationMethod::kClosedForm);

struct ClassValues {
  BigCount count;        // number of projective arrangements
  Rational expectation;  // expected sum of edge lengths over them
};

// Closed forms per tree class, without building the tree. For kLinear, k is
// the root's distance from one end and is normalized like make_class does.
ClassValues class_formula(TreeClass cls, std::size_t n, std::size_t k = 0);

}  // namespace projlin

#endif  // PROJLIN_EXPECTATION_HPP_
