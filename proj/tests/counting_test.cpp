#include <gtest/gtest.h>

#include <random>

#include "hkdet/counting.hpp"
#include "naive_oracle.hpp"

namespace hkdet {
namespace {

const Bound kInf = Bound::infinity();
Bound fin(std::int64_t v) { return Bound::finite(v); }

TEST(Bound, ParseAndPrint) {
  EXPECT_EQ(Bound::parse("inf"), kInf);
  EXPECT_EQ(Bound::parse("12"), fin(12));
  EXPECT_EQ(Bound::parse("-1"), fin(-1));
  EXPECT_FALSE(Bound::parse("1x").has_value());
  EXPECT_FALSE(Bound::parse("").has_value());
  EXPECT_EQ(kInf.to_string(), "inf");
  EXPECT_LT(fin(1000), kInf);
  EXPECT_EQ(kInf.minus(5), kInf);
  EXPECT_EQ(kInf.clamp_to(3), fin(3));
}

TEST(Count, SingleRowClosedForms) {
  EXPECT_EQ(count({1, 2, 3, {kInf}, {kInf, kInf}}), 9);
  EXPECT_EQ(count({1, 3, 5, {fin(2)}, {fin(4), fin(4), fin(4)}}), 10);
  // product of min{c_i + 1, q}
  EXPECT_EQ(count({1, 3, 4, {kInf}, {fin(0), fin(2), kInf}}), 1 * 3 * 4);
}

TEST(Count, SingleRowNestedSumAgreesWithNaive) {
  for (std::int64_t q = 1; q <= 4; ++q)
    for (std::int64_t r = 0; r <= 7; ++r)
      for (std::int64_t c0 : {0, 1, 2, 9})
        for (std::int64_t c1 : {0, 1, 3}) {
          CountQuery query{1, 3, q, {fin(r)}, {fin(c0), fin(c1), kInf}};
          EXPECT_EQ(count(query), Natural(testing::naive_count(query))) << describe(query);
        }
}

TEST(Count, TwoByTwoExamples) {
  EXPECT_EQ(count(CountQuery::unbounded(2, 2, 2)), 10);
  // 0/1 matrices, staircase, row 2 and both columns at most 1: 7 survive.
  CountQuery query{2, 2, 2, {kInf, fin(1)}, {fin(1), fin(1)}};
  EXPECT_EQ(testing::naive_count(query), 7u);
  EXPECT_EQ(count(query), 7);
}

TEST(Count, EmptyMatrixConventions) {
  EXPECT_EQ(count({0, 3, 4, {}, {fin(1), fin(2), kInf}}), 1);
  EXPECT_EQ(count({3, 0, 4, {fin(1), fin(2), kInf}, {}}), 1);
  EXPECT_EQ(count({0, 2, 4, {}, {fin(-1), kInf}}), 0);
}

TEST(Count, NegativeBoundGivesZero) {
  EXPECT_EQ(count({2, 3, 3, {kInf, kInf}, {kInf, fin(-1), kInf}}), 0);
  EXPECT_EQ(count({3, 2, 3, {fin(-1), kInf, kInf}, {kInf, kInf}}), 0);
  EXPECT_EQ(count({1, 1, 3, {fin(-4)}, {kInf}}), 0);
}

TEST(Count, RejectsBadQueries) {
  EXPECT_THROW(count({2, 2, 0, {kInf, kInf}, {kInf, kInf}}), std::invalid_argument);
  EXPECT_THROW(count({2, 2, -3, {kInf, kInf}, {kInf, kInf}}), std::invalid_argument);
  EXPECT_THROW(count({2, 2, 2, {kInf}, {kInf, kInf}}), std::invalid_argument);
  EXPECT_THROW(count({2, 2, 2, {kInf, kInf}, {kInf, kInf, kInf}}), std::invalid_argument);
}

TEST(HilbertKunz, Examples) {
  EXPECT_EQ(hilbert_kunz(2, 2, 2), 10);
  EXPECT_EQ(hilbert_kunz(2, 3, 2), 23);
  EXPECT_EQ(hilbert_kunz(3, 4, 1), 1);
  EXPECT_THROW(hilbert_kunz(0, 2, 2), std::invalid_argument);
}

TEST(HilbertKunz, QEqualsOneIsOne) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(hilbert_kunz(m, n, 1), 1);
}

TEST(Canonicalize, TransposesAndClamps) {
  const auto key = canonicalize({3, 2, 3, {fin(1), fin(99), kInf}, {fin(4), fin(7)}});
  EXPECT_EQ(key.m, 2);
  EXPECT_EQ(key.n, 3);
  // old columns are the rows now; cap for a row of 3 cells is 3 * 2 = 6.
  EXPECT_EQ(key.rows, (std::vector<Bound>{fin(4), kInf}));
  // cap for a column of 2 cells is 2 * 2 = 4.
  EXPECT_EQ(key.cols, (std::vector<Bound>{fin(1), kInf, kInf}));
}

TEST(Canonicalize, KeepsBoundOrder) {
  const auto key = canonicalize({2, 2, 5, {fin(3), fin(1)}, {fin(2), fin(0)}});
  EXPECT_EQ(key.rows, (std::vector<Bound>{fin(3), fin(1)}));
  EXPECT_EQ(key.cols, (std::vector<Bound>{fin(2), fin(0)}));
}

TEST(StaircaseCounter, MemoizesAcrossCalls) {
  StaircaseCounter counter;
  EXPECT_EQ(counter.hilbert_kunz(3, 3, 4), counter.hilbert_kunz(3, 3, 4));
  const auto size = counter.cache_size();
  EXPECT_GT(size, 0u);
  counter.hilbert_kunz(3, 3, 4);
  EXPECT_EQ(counter.cache_size(), size);
  counter.clear();
  EXPECT_EQ(counter.cache_size(), 0u);
}

TEST(StaircaseCounter, DeepShapeStaysWithinStack) {
  StaircaseCounter counter;
  EXPECT_EQ(counter.hilbert_kunz(1, 60, 1), 1);
  EXPECT_EQ(counter.hilbert_kunz(2, 40, 2), counter.hilbert_kunz(40, 2, 2));
  EXPECT_EQ(counter.hilbert_kunz(6, 6, 2), counter.hilbert_kunz(6, 6, 2));
}

// ---------------------------------------------------------- properties

class RandomQueries : public ::testing::Test {
 protected:
  CountQuery draw(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_int_distribution<std::int64_t> qd(1, 4);
    CountQuery query{dim(rng), dim(rng), qd(rng), {}, {}};
    std::uniform_int_distribution<std::int64_t> b(-1, 2 * query.q);
    auto bound = [&] {
      const std::int64_t v = b(rng);
      return v == 2 * query.q ? kInf : fin(std::max<std::int64_t>(v, 0));
    };
    for (int i = 0; i < query.m; ++i) query.rows.push_back(bound());
    for (int j = 0; j < query.n; ++j) query.cols.push_back(bound());
    return query;
  }
  std::mt19937_64 rng{20240611};
};

TEST_F(RandomQueries, TransposeSymmetry) {
  for (int k = 0; k < 300; ++k) {
    const auto query = draw(rng);
    const CountQuery transposed{query.n, query.m, query.q, query.cols, query.rows};
    EXPECT_EQ(count(query), count(transposed)) << describe(query);
  }
}

TEST_F(RandomQueries, BoundMonotonicity) {
  for (int k = 0; k < 200; ++k) {
    const auto query = draw(rng);
    const Natural base = count(query);
    for (int i = 0; i < query.m; ++i) {
      auto up = query;
      up.rows[i] = up.rows[i].is_infinite() ? kInf : fin(up.rows[i].value() + 1);
      EXPECT_GE(count(up), base) << describe(query);
      up.rows[i] = kInf;
      EXPECT_GE(count(up), base) << describe(query);
    }
    for (int j = 0; j < query.n; ++j) {
      auto up = query;
      up.cols[j] = up.cols[j].is_infinite() ? kInf : fin(up.cols[j].value() + 1);
      EXPECT_GE(count(up), base) << describe(query);
    }
  }
}

TEST_F(RandomQueries, ClampingSoundness) {
  for (int k = 0; k < 200; ++k) {
    const auto query = draw(rng);
    const Natural base = count(query);
    auto loosened = query;
    for (auto& b : loosened.rows)
      if (b.is_finite() && b.value() > query.n * (query.q - 1)) b = kInf;
    for (auto& b : loosened.cols)
      if (b.is_finite() && b.value() > query.m * (query.q - 1)) b = kInf;
    EXPECT_EQ(count(loosened), base);
    auto boundary = query;
    for (auto& b : boundary.rows)
      if (b.is_infinite()) b = fin(query.n * (query.q - 1));
    for (auto& b : boundary.cols)
      if (b.is_infinite()) b = fin(query.m * (query.q - 1));
    EXPECT_EQ(count(boundary), base) << describe(query);
  }
}

TEST_F(RandomQueries, MonotoneInQ) {
  for (int k = 0; k < 150; ++k) {
    auto query = draw(rng);
    Natural prev = count(query);
    for (int step = 0; step < 3; ++step) {
      ++query.q;
      const Natural next = count(query);
      EXPECT_GE(next, prev) << describe(query);
      prev = next;
    }
  }
}

TEST_F(RandomQueries, AgreesWithNaiveEnumeration) {
  for (int k = 0; k < 150; ++k) {
    const auto query = draw(rng);
    EXPECT_EQ(count(query), Natural(testing::naive_count(query))) << describe(query);
  }
}

}  // namespace
}  // namespace hkdet
