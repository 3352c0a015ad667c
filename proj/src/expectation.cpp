#include "projlin/expectation.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "projlin/error.hpp"

namespace projlin {

namespace {

using boost::multiprecision::cpp_int;

Rational ratio(const cpp_int& num, const cpp_int& den) { return Rational(num, den); }

cpp_int from_u128(unsigned __int128 value) {
  cpp_int high = static_cast<std::uint64_t>(value >> 64);
  return (high << 64) + static_cast<std::uint64_t>(value);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::kOutOfRange, message);
}

// Sum over vertices of n_v (2 d_v + 1). Vertex ids are 32-bit, so the sum
// stays below 3 * 2^64 and a 128-bit accumulator cannot overflow.
cpp_int size_degree_sum(const SubtreeMetrics& metrics) {
  unsigned __int128 sum = 0;
  for (std::size_t i = 0; i < metrics.size.size(); ++i) {
    sum += static_cast<unsigned __int128>(metrics.size[i]) * (2 * metrics.out_degree[i] + 1);
  }
  return from_u128(sum);
}

}  // namespace

Rational expected_D_unconstrained(std::size_t n) {
  require(n >= 1, "expected_D_unconstrained needs n >= 1");
  const cpp_int nn = n;
  return ratio(nn * nn - 1, 3);
}

Rational edge_length_probability(std::size_t n, std::size_t d) {
  require(n >= 2 && d >= 1 && d <= n - 1,
          "edge length " + std::to_string(d) + " is impossible for n = " + std::to_string(n));
  const cpp_int nn = n;
  return ratio(2 * (nn - d), nn * (nn - 1));
}

Rational expected_anchor(std::size_t subtree_size) {
  require(subtree_size >= 1, "a subtree has at least one vertex");
  return ratio(cpp_int(subtree_size) + 1, 2);
}

Rational expected_coanchor(std::size_t n, std::size_t subtree_size) {
  require(subtree_size >= 1 && subtree_size + 1 <= n,
          "child subtree size " + std::to_string(subtree_size) + " is impossible for n = " +
              std::to_string(n));
  return ratio(cpp_int(n) - subtree_size - 1, 3);
}

Rational expected_root_edge(std::size_t n, std::size_t subtree_size) {
  return expected_anchor(subtree_size) + expected_coanchor(n, subtree_size);
}

Rational expected_D_projective(const RootedTree& tree, const SubtreeMetrics& metrics,
                               ExpectationMethod method) {
  if (method == ExpectationMethod::kClosedForm) {
    return ratio(size_degree_sum(metrics) - 1, 6);
  }
  // E[v] = (d_v (2 n_v + 1) + n_v - 1)/6 + sum of E over the children of v.
  std::vector<Rational> below(tree.size());
  auto order = tree.top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const cpp_int nv = metrics.subtree_size(v);
    const cpp_int dv = metrics.degree(v);
    Rational& e = below[v - 1];
    e += ratio(dv * (2 * nv + 1) + nv - 1, 6);
    if (auto p = tree.parent(v)) below[*p - 1] += e;
  }
  return below[tree.root() - 1];
}

Rational expected_D_projective(const RootedTree& tree, ExpectationMethod method) {
  return expected_D_projective(tree, compute_metrics(tree), method);
}

Rational expected_Dprime_projective(const RootedTree& tree, ExpectationMethod method) {
  const SubtreeMetrics metrics = compute_metrics(tree);
  if (method == ExpectationMethod::kClosedForm) {
    return ratio(size_degree_sum(metrics) + 5 - 6 * cpp_int(tree.size()), 6);
  }
  // E'[v] = (d_v (2 n_v - 5) + n_v - 1)/6 + sum of E' over the children of v.
  std::vector<Rational> below(tree.size());
  auto order = tree.top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const cpp_int nv = metrics.subtree_size(v);
    const cpp_int dv = metrics.degree(v);
    Rational& e = below[v - 1];
    e += ratio(dv * (2 * nv - 5) + nv - 1, 6);
    if (auto p = tree.parent(v)) below[*p - 1] += e;
  }
  return below[tree.root() - 1];
}

ClassValues class_formula(TreeClass cls, std::size_t n, std::size_t k) {
  const bool quasi = cls == TreeClass::kQuasiStarHub || cls == TreeClass::kQuasiStarHubLeaf ||
                     cls == TreeClass::kQuasiStarFarLeaf || cls == TreeClass::kQuasiStarBridge;
  if (n < 1 || (cls == TreeClass::kStarLeaf && n < 2) || (quasi && n < 4)) {
    throw Error(ErrorKind::kUnsupportedSize,
                std::string(tree_class_name(cls)) + " is undefined for n = " + std::to_string(n));
  }
  const cpp_int nn = n;
  switch (cls) {
    case TreeClass::kStarHub:
      return {factorial(n), ratio(nn * nn - 1, 3)};
    case TreeClass::kStarLeaf:
      return {2 * factorial(n - 1), ratio(nn * (2 * nn - 1), 6)};
    case TreeClass::kQuasiStarHub:
      return {2 * factorial(n - 1), ratio(2 * nn * nn - 2 * nn + 3, 6)};
    case TreeClass::kQuasiStarFarLeaf:
      return {4 * factorial(n - 2), ratio(2 * nn * nn - 2 * nn + 3, 6)};
    case TreeClass::kQuasiStarBridge:
      return {6 * factorial(n - 2), ratio(2 * nn * nn - 3 * nn + 7, 6)};
    case TreeClass::kQuasiStarHubLeaf:
      return {4 * factorial(n - 2), ratio(2 * nn * nn - 3 * nn + 7, 6)};
    case TreeClass::kLinear: {
      const std::size_t offset = normalize_linear_offset(n, k);
      if (offset == 0) {
        return {cpp_int(1) << (n - 1), ratio((nn - 1) * (nn + 2), 4)};
      }
      const cpp_int kk = offset;
      return {3 * (cpp_int(1) << (n - 2)),
              ratio((nn - 1) * (3 * nn + 10) + 6 * kk * (kk + 1 - nn), 12)};
    }
  }
  throw Error(ErrorKind::kUnsupportedSize, "unknown tree class");
}

}  // namespace projlin
