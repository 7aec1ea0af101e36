#include <gtest/gtest.h>

#include "hkdet/binomial.hpp"
#include "hkdet/oracles.hpp"
#include "naive_oracle.hpp"

namespace hkdet {
namespace {

const Bound kInf = Bound::infinity();
Bound fin(std::int64_t v) { return Bound::finite(v); }

TEST(Staircase, Predicate) {
  EXPECT_FALSE(is_staircase(ExponentMatrix(2, 2, {1, 0, 0, 1})));
  EXPECT_TRUE(is_staircase(ExponentMatrix(2, 2, {0, 1, 1, 0})));
  EXPECT_TRUE(is_staircase(ExponentMatrix(3, 4)));
  // The support pictured as a south-west to north-east staircase.
  EXPECT_TRUE(is_staircase(ExponentMatrix(3, 4, {0, 0, 2, 1,  //
                                                 0, 1, 1, 0,  //
                                                 3, 1, 0, 0})));
  EXPECT_FALSE(is_staircase(ExponentMatrix(3, 3, {0, 1, 0,  //
                                                 0, 0, 0,  //
                                                 0, 0, 5})));
}

TEST(RowOrCol, Predicate) {
  EXPECT_TRUE(satisfies_row_or_col(ExponentMatrix(2, 2, {1, 1, 0, 0}), 2));
  EXPECT_FALSE(satisfies_row_or_col(ExponentMatrix(2, 2, {1, 1, 1, 1}), 2));
  EXPECT_TRUE(satisfies_row_or_col(ExponentMatrix(2, 3), 1));
}

TEST(BruteCount, Examples) {
  EXPECT_EQ(brute_count(CountQuery::unbounded(2, 2, 2)), 10);
  // 2x2 partial permutation matrices: 1 + 4 + 2 minus the diagonal one.
  EXPECT_EQ(brute_count({2, 2, 2, {fin(1), fin(1)}, {fin(1), fin(1)}}), 6);
  EXPECT_EQ(brute_count(CountQuery::unbounded(1, 2, 3)), 9);
}

TEST(BruteCount, AgreesWithNaiveOdometer) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (std::int64_t q = 1; q <= 3; ++q)
        for (const auto& query : brute_battery_queries(m, n, q, 99, 5))
          EXPECT_EQ(brute_count(query), Natural(testing::naive_count(query))) << describe(query);
}

TEST(BruteCount, RefusesOverBudget) {
  EXPECT_THROW(brute_count(CountQuery::unbounded(3, 3, 4), 1000), BudgetExceeded);
  EXPECT_NO_THROW(brute_count(CountQuery::unbounded(3, 3, 2), 512));
  EXPECT_THROW(brute_count(CountQuery::unbounded(9, 9, 9)), BudgetExceeded);
}

TEST(BruteCount, NegativeBoundIsZero) {
  EXPECT_EQ(brute_count({2, 2, 3, {kInf, fin(-1)}, {kInf, kInf}}), 0);
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(2, 3), 4);
  EXPECT_EQ(alpha(1, 7), 1);
  EXPECT_EQ(alpha(3, 0), 1);
}

// Exponent vectors in [0, q-1]^m of total degree d, by odometer.
std::uint64_t bounded_vectors(int m, std::int64_t d, std::int64_t q) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(m), 0);
  std::uint64_t hits = 0;
  while (true) {
    std::int64_t s = 0;
    for (auto x : e) s += x;
    if (s == d) ++hits;
    std::size_t k = 0;
    while (k < e.size() && e[k] == q - 1) e[k++] = 0;
    if (k == e.size()) break;
    ++e[k];
  }
  return hits;
}

TEST(AlphaBounded, Examples) {
  EXPECT_EQ(bounded_vectors(2, 2, 2), 1u);
  EXPECT_EQ(alpha_bounded(2, 2, 2), 1);
  EXPECT_EQ(bounded_vectors(2, 1, 2), 2u);
  EXPECT_EQ(alpha_bounded(2, 1, 2), 2);
  EXPECT_EQ(alpha_bounded(2, 3, 2), 0);
}

TEST(AlphaBounded, MatchesEnumeration) {
  for (int m = 1; m <= 4; ++m)
    for (std::int64_t q = 1; q <= 5; ++q)
      for (std::int64_t d = 0; d <= m * (q - 1) + 2; ++d)
        EXPECT_EQ(alpha_bounded(m, d, q), Natural(static_cast<unsigned long>(bounded_vectors(m, d, q))))
            << m << "," << d << "," << q;
}

TEST(AlphaBounded, UnconstrainedBelowQ) {
  for (int m = 1; m <= 6; ++m)
    for (std::int64_t q = 1; q <= 8; ++q)
      for (std::int64_t d = 0; d <= q - 1; ++d) EXPECT_EQ(alpha_bounded(m, d, q), alpha(m, d));
}

TEST(AlphaBounded, SumsToQPowerM) {
  for (int m = 1; m <= 6; ++m)
    for (std::int64_t q = 1; q <= 8; ++q) {
      Natural total = 0;
      for (std::int64_t d = 0; d <= m * (q - 1); ++d) total += alpha_bounded(m, d, q);
      EXPECT_EQ(total, power(q, m));
    }
}

TEST(SegreLength, Examples) {
  // 8 + 8 - 6 term by term.
  Natural first = 0, overlap = 0;
  for (std::int64_t d = 0; d <= 2; ++d) {
    first += alpha(2, d) * alpha_bounded(2, d, 2);
    overlap += alpha_bounded(2, d, 2) * alpha_bounded(2, d, 2);
  }
  EXPECT_EQ(first, 8);
  EXPECT_EQ(overlap, 6);
  EXPECT_EQ(segre_length(2, 2, 2), 10);
  EXPECT_EQ(segre_length(1, 1, 5), 5);
  EXPECT_EQ(segre_length(2, 3, 2), 23);
  EXPECT_EQ(segre_length(2, 3, 2), hilbert_kunz(2, 3, 2));
}

TEST(Batteries, SmallGridsPass) {
  const auto brute = run_brute_battery(2, 3, 7);
  EXPECT_TRUE(brute.passed) << brute.first_mismatch.value_or("");
  const auto segre = run_segre_battery(3, 5);
  EXPECT_TRUE(segre.passed) << segre.first_mismatch.value_or("");
  EXPECT_EQ(segre.checks, 45u);
}

TEST(Batteries, QueryListIsDeterministic) {
  const auto a = brute_battery_queries(3, 2, 4, 7);
  const auto b = brute_battery_queries(3, 2, 4, 7);
  ASSERT_EQ(a.size(), 2u + 3u * 5u + 50u);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(describe(a[k]), describe(b[k]));
  const auto c = brute_battery_queries(3, 2, 4, 8);
  bool differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) differs = differs || describe(a[k]) != describe(c[k]);
  EXPECT_TRUE(differs);
}

TEST(Batteries, BudgetRefusal) {
  EXPECT_THROW(run_brute_battery(9, 9, 7), BudgetExceeded);
}

}  // namespace
}  // namespace hkdet
