#include "projlin/extrema.hpp"

#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "projlin/error.hpp"
#include "projlin/expectation.hpp"

namespace projlin {
namespace {

struct Row {
  std::size_t n;
  long long num;
  long long den;
  std::size_t optima;
};

// Minimum expectation and number of minimizing trees for n = 1..20.
const std::vector<Row> kMinima = {
    {1, 0, 1, 1},   {2, 1, 1, 1},    {3, 5, 2, 1},    {4, 9, 2, 2},    {5, 19, 3, 1},
    {6, 26, 3, 1},  {7, 11, 1, 1},   {8, 83, 6, 2},   {9, 33, 2, 1},   {10, 58, 3, 2},
    {11, 22, 1, 1}, {12, 151, 6, 1}, {13, 85, 3, 2},  {14, 63, 2, 1},  {15, 104, 3, 1},
    {16, 38, 1, 1}, {17, 83, 2, 1},  {18, 45, 1, 2},  {19, 97, 2, 2},  {20, 52, 1, 2},
};

TEST(MinExpectedTest, PublishedMinima) {
  MemoTable memo;
  for (const Row& row : kMinima) {
    const OptimumEntry& e = min_expected(row.n, memo);
    EXPECT_EQ(e.value, Rational(row.num, row.den)) << row.n;
    EXPECT_EQ(e.trees.size(), row.optima) << row.n;
    for (const RootedTree& t : e.materialize()) {
      EXPECT_EQ(t.size(), row.n);
      EXPECT_EQ(expected_D_projective(t), e.value);
    }
  }
}

// Exhaustive minimum over all rooted trees, with the set of minimizers.
TEST(MinExpectedTest, MatchesExhaustiveSearch) {
  MemoTable memo;
  for (std::size_t n = 1; n <= 10; ++n) {
    Rational best = expected_D_unconstrained(n) + 1;
    std::set<std::string> winners;
    for_each_rooted_tree(n, [&](const RootedTree& t) {
      const Rational e = expected_D_projective(t);
      if (e < best) {
        best = e;
        winners.clear();
      }
      if (e == best) winners.insert(canonical_code(t).str());
    });
    const OptimumEntry& entry = min_expected(n, memo);
    EXPECT_EQ(entry.value, best) << n;
    std::set<std::string> got;
    for (const RootedTree& t : entry.materialize()) got.insert(canonical_code(t).str());
    EXPECT_EQ(got, winners) << n;
  }
}

TEST(MinExpectedTest, TreesSortedAndCanonical) {
  MemoTable memo;
  const OptimumEntry& e = min_expected(4, memo);
  ASSERT_EQ(e.trees.size(), 2u);
  EXPECT_EQ(e.trees[0], (std::vector<Vertex>{0, 1, 2, 1}));
  EXPECT_EQ(e.trees[1], (std::vector<Vertex>{0, 1, 2, 3}));
  for (const auto& hv : e.trees) {
    EXPECT_EQ(canonical_head_vector(from_head_vector(hv)), hv);
  }
}

TEST(MinExpectedTest, MemoFilledAndCapped) {
  MemoTable memo;
  min_expected(12, memo);
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_TRUE(memo.contains(n)) << n;
  try {
    min_expected(21, memo);
    FAIL() << "expected CapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
  EXPECT_NO_THROW(min_expected(21, memo, 21));
}

TEST(MinExpectedTest, BelowMaximumAndIncreasing) {
  MemoTable memo;
  for (std::size_t n = 3; n <= 20; ++n) {
    EXPECT_LT(min_expected(n, memo).value, max_expected(n).value);
    EXPECT_LT(min_expected(n - 1, memo).value, min_expected(n, memo).value);
  }
}

TEST(MaxExpectedTest, StarAtHub) {
  for (std::size_t n = 1; n <= 50; ++n) {
    const MaximumResult r = max_expected(n);
    EXPECT_EQ(r.value, Rational(n * n - 1, 3));
    EXPECT_EQ(expected_D_projective(r.tree), r.value);
    EXPECT_EQ(r.tree.out_degree(r.tree.root()), n - 1);
  }
}

TEST(MaxExpectedTest, MatchesExhaustiveSearch) {
  for (std::size_t n = 1; n <= 9; ++n) {
    Rational best = -1;
    for_each_rooted_tree(n, [&](const RootedTree& t) {
      best = std::max(best, expected_D_projective(t));
    });
    EXPECT_EQ(max_expected(n).value, best);
  }
}

TEST(RootedTreeEnumerationTest, Counts) {
  // OEIS A000081
  const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    std::set<std::string> codes;
    for (const RootedTree& t : enumerate_rooted_trees(n)) {
      EXPECT_EQ(t.size(), n);
      codes.insert(canonical_code(t).str());
    }
    EXPECT_EQ(codes.size(), expected[n - 1]) << n;
    EXPECT_EQ(enumerate_rooted_trees(n).size(), expected[n - 1]) << n;
  }
}

TEST(RootedTreeEnumerationTest, MatchesHeadVectorSearch) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> codes;
    for (const RootedTree& t : enumerate_rooted_trees(n)) codes.insert(canonical_code(t).str());
    EXPECT_EQ(codes, oracle::rooted_tree_codes_by_head_vectors(n));
  }
}

TEST(RootedTreeEnumerationTest, Cap) {
  EXPECT_THROW(enumerate_rooted_trees(11), Error);
}

std::size_t distinct_codes(const std::vector<RootedTree>& trees) {
  std::set<std::string> codes;
  for (const RootedTree& t : trees) codes.insert(canonical_code(t).str());
  return codes.size();
}

TEST(CombineForestsTest, EqualPartsUseMultisets) {
  const std::vector<RootedTree> one = enumerate_rooted_trees(1);
  const std::vector<std::size_t> parts{1, 1, 1};
  const std::vector<std::vector<RootedTree>> lists{one, one, one};
  const auto out = combine_forests(parts, lists);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(canonical_code(out[0]), canonical_code(make_class(TreeClass::kStarHub, 4)));
  EXPECT_EQ(out[0].root(), 1u);
}

TEST(CombineForestsTest, DistinctPartsUseFullProduct) {
  const auto t2 = enumerate_rooted_trees(2);
  const auto t3 = enumerate_rooted_trees(3);
  const std::vector<std::size_t> parts{3, 2};
  const std::vector<std::vector<RootedTree>> lists{t3, t2};
  const auto out = combine_forests(parts, lists);
  EXPECT_EQ(out.size(), t2.size() * t3.size());
  EXPECT_EQ(distinct_codes(out), out.size());
}

TEST(CombineForestsTest, MixedParts) {
  // two equal parts from a list of two trees: C(2 + 1, 2) = 3 multisets
  const std::vector<RootedTree> pair{make_class(TreeClass::kLinear, 3, 0),
                                     make_class(TreeClass::kStarHub, 3)};
  const std::vector<RootedTree> single{make_class(TreeClass::kStarHub, 11)};
  const std::vector<std::size_t> parts{11, 3, 3};
  const std::vector<std::vector<RootedTree>> lists{single, pair, pair};
  const auto out = combine_forests(parts, lists);
  EXPECT_EQ(out.size(), 3u);
  EXPECT_EQ(distinct_codes(out), 3u);
  for (const RootedTree& t : out) EXPECT_EQ(t.size(), 18u);
}

TEST(CombineForestsTest, SizeMismatch) {
  const std::vector<std::size_t> parts{2};
  const std::vector<std::vector<RootedTree>> lists{enumerate_rooted_trees(3)};
  EXPECT_THROW(combine_forests(parts, lists), Error);
}

}  // namespace
}  // namespace projlin
