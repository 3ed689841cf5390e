#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "brauer/partitions.hpp"

using namespace brauer;

namespace {

// Independent counter: p(n, k) = number of partitions of n with parts <= k.
long long count_partitions(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return count_partitions(n - k, k) + count_partitions(n, k - 1);
}

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST(ParsePartition, ReadsCommaList) {
  EXPECT_EQ(parse_partition("2,1,1"), (Partition{2, 1, 1}));
  EXPECT_EQ(parse_partition("[3, 3]"), (Partition{3, 3}));
  EXPECT_EQ(parse_partition(" 4 "), (Partition{4}));
}

TEST(ParsePartition, EmptyForms) {
  EXPECT_TRUE(parse_partition("").empty());
  EXPECT_TRUE(parse_partition("[]").empty());
}

TEST(ParsePartition, RejectsIncreasing) {
  try {
    parse_partition("1,2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("not weakly decreasing"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("'2'"), std::string::npos);
  }
}

TEST(ParsePartition, RejectsBadTokens) {
  EXPECT_THROW(parse_partition("2,0"), ParseError);
  EXPECT_THROW(parse_partition("2,-1"), ParseError);
  EXPECT_THROW(parse_partition("2,x"), ParseError);
  EXPECT_THROW(parse_partition("2,,1"), ParseError);
  EXPECT_THROW(parse_partition("[2,1"), ParseError);
  try {
    parse_partition("3,abc");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("abc"), std::string::npos);
  }
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(Partition{2, 1, 1}), (Partition{3, 1}));
  EXPECT_EQ(transpose(Partition{}), Partition{});
  EXPECT_EQ(transpose(Partition{3, 3}), (Partition{2, 2, 2}));
}

TEST(Contents, Examples) {
  EXPECT_TRUE(contents(Partition{}, std::int64_t{5}).empty());
  // boxes (1,1),(1,2),(2,1) have contents 0, 1, -1 and (delta-1)/2 = 0
  EXPECT_EQ(contents(Partition{2, 1}, std::int64_t{1}), (std::vector<HalfInt>{h(-2), h(0), h(2)}));
  EXPECT_EQ(contents(Partition{1}, std::int64_t{2}), (std::vector<HalfInt>{h(1)}));
}

TEST(Contents, RationalDeltaAgreesWithIntegral) {
  for (const auto& lambda : enumerate_partitions(6)) {
    for (std::int64_t delta = -3; delta <= 4; ++delta) {
      auto ints = contents(lambda, delta);
      auto rats = contents(lambda, Rational(delta));
      ASSERT_EQ(ints.size(), rats.size());
      for (std::size_t k = 0; k < ints.size(); ++k) EXPECT_EQ(to_rational(ints[k]), rats[k]);
    }
  }
  EXPECT_EQ(contents(Partition{1}, Rational(1, 3)), (std::vector<Rational>{Rational(-1, 3)}));
}

TEST(EnumeratePartitions, SmallCases) {
  EXPECT_EQ(enumerate_partitions(0), (std::vector<Partition>{Partition{}}));
  EXPECT_EQ(enumerate_partitions(3).size(), 7u);
  EXPECT_EQ(enumerate_partitions(2), (std::vector<Partition>{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}}));
}

TEST(EnumeratePartitions, CountsMatchRecursiveCounter) {
  long long running = 0;
  for (int n = 0; n <= 20; ++n) {
    running += count_partitions(n, n);
    EXPECT_EQ(static_cast<long long>(enumerate_partitions(n).size()), running) << "n=" << n;
  }
}

TEST(EnumeratePartitions, CanonicalOrderIsSorted) {
  auto all = enumerate_partitions(9);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

TEST(PartitionProperties, TransposeIsInvolution) {
  for (const auto& lambda : enumerate_partitions(12)) {
    const Partition t = transpose(lambda);
    EXPECT_EQ(transpose(t), lambda);
    EXPECT_EQ(t.size(), lambda.size());
  }
}

TEST(PartitionProperties, ContentsNegateUnderTranspose) {
  for (const auto& lambda : enumerate_partitions(10)) {
    for (std::int64_t delta = -3; delta <= 4; ++delta) {
      // c_delta(x) = (delta-1)/2 + c(x), and c negates under transpose,
      // so the transposed multiset is { (delta-1) - v }.
      std::vector<HalfInt> expected;
      for (HalfInt v : contents(lambda, delta)) expected.push_back(HalfInt::from_twice(2 * (delta - 1)) - v);
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(contents(transpose(lambda), delta), expected);
    }
  }
}
