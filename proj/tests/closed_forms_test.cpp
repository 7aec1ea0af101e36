#include <gtest/gtest.h>

#include "hkdet/binomial.hpp"
#include "hkdet/closed_forms.hpp"
#include "hkdet/counting.hpp"
#include "naive_oracle.hpp"

namespace hkdet {
namespace {

Rational frac(long num, long den) { return make_rational(num, den); }

RationalPolynomial scaled(std::initializer_list<long> numerators, long den) {
  std::vector<Rational> c;
  for (long v : numerators) c.push_back(frac(v, den));
  return RationalPolynomial(std::move(c));
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(eval_closed_form(ClosedFormId::INF_QM1, 2, 2), 8);
  EXPECT_EQ(eval_closed_form(ClosedFormId::INF_R_INF, 2, 2, 1), 9);
  EXPECT_EQ(eval_closed_form(ClosedFormId::QM1_R_QM1, 2, 2, 1), 6);
  EXPECT_EQ(eval_closed_form(ClosedFormId::INF_R_INFQM1, 2, 2, 1), 8);
  EXPECT_EQ(eval_closed_form(ClosedFormId::QM1_R_INF, 2, 2, 1), 8);
  EXPECT_EQ(eval_closed_form(ClosedFormId::HK_2N, 2, 2), 10);
  EXPECT_EQ(eval_closed_form(ClosedFormId::MULT_2N, 2, 5), frac(4, 3));
}

TEST(ClosedForms, ExamplesAgreeWithNaiveEnumeration) {
  for (ClosedFormId id : kBoundPatternForms) {
    const auto query = matching_query(id, 2, 2, 1);
    EXPECT_EQ(eval_closed_form(id, 2, 2, 1), Rational(Natural(testing::naive_count(query))))
        << name(id);
  }
}

TEST(ClosedForms, Rejections) {
  EXPECT_THROW(eval_closed_form(ClosedFormId::INF_QM1, 1, 3), std::invalid_argument);
  EXPECT_THROW(eval_closed_form(ClosedFormId::INF_QM1, 2, 0), std::invalid_argument);
  EXPECT_THROW(eval_closed_form(ClosedFormId::INF_R_INF, 2, 3), std::invalid_argument);
  EXPECT_THROW(eval_closed_form(ClosedFormId::INF_R_INF, 2, 3, 3), std::invalid_argument);
  EXPECT_THROW(eval_closed_form(ClosedFormId::QM1_R_INF, 2, 3, -1), std::invalid_argument);
  EXPECT_THROW(hk_polynomial_2n(1), std::invalid_argument);
  EXPECT_THROW(hk_multiplicity_2n(1), std::invalid_argument);
}

TEST(ClosedForms, MatchingQueries) {
  const auto q = matching_query(ClosedFormId::INF_R_INFQM1, 4, 5, 2);
  EXPECT_EQ(describe(q), "N_5(2,4; inf,2; inf,4,4,4)");
  EXPECT_EQ(describe(matching_query(ClosedFormId::QM1_R_INF, 2, 3, 0)), "N_3(2,2; 2,0; inf,inf)");
}

TEST(ClosedForms, BoundPatternBatteryAgainstRecursion) {
  StaircaseCounter counter;
  for (ClosedFormId id : kBoundPatternForms)
    for (int n = 2; n <= 5; ++n)
      for (std::int64_t q = 2; q <= 7; ++q)
        for (std::int64_t r = 0; r < q; ++r) {
          if (!uses_r(id) && r > 0) break;
          const auto query = matching_query(id, n, q, r);
          EXPECT_EQ(eval_closed_form(id, n, q, r), Rational(counter.count(query)))
              << name(id) << " " << describe(query);
        }
}

TEST(HkPolynomial2n, ListedPolynomials) {
  EXPECT_EQ(hk_polynomial_2n(2), scaled({0, -1, 0, 4}, 3));
  EXPECT_EQ(hk_polynomial_2n(3), scaled({0, -2, -1, -2, 13}, 8));
  EXPECT_EQ(hk_polynomial_2n(4), scaled({0, -6, -5, 5, -25, 61}, 30));
  EXPECT_EQ(hk_polynomial_2n(5), scaled({0, -24, -26, 15, 25, -207, 361}, 144));
}

TEST(HkPolynomial2n, AgreesWithRecursion) {
  StaircaseCounter counter;
  for (int n = 2; n <= 5; ++n) {
    const auto p = hk_polynomial_2n(n);
    EXPECT_EQ(p.degree(), n + 1);
    for (std::int64_t q = 1; q <= 16; ++q)
      EXPECT_EQ(p(q), Rational(counter.hilbert_kunz(2, n, q))) << n << " " << q;
  }
}

TEST(HkPolynomial2n, NormalizationAndLeadingTerm) {
  for (int n = 2; n <= 8; ++n) {
    const auto p = hk_polynomial_2n(n);
    EXPECT_EQ(p(1), 1) << n;
    EXPECT_EQ(p.leading(), hk_multiplicity_2n(n)) << n;
  }
}

TEST(Multiplicity2n, Examples) {
  EXPECT_EQ(hk_multiplicity_2n(2), frac(4, 3));
  EXPECT_EQ(hk_multiplicity_2n(3), frac(13, 8));
  EXPECT_EQ(hk_multiplicity_2n(4), frac(61, 30));
  EXPECT_EQ(hk_multiplicity_2n(5), frac(361, 144));
}

TEST(EyMultiplicity, TwoRowCase) {
  EXPECT_EQ(ey_multiplicity(2, 2), frac(4, 3));
  EXPECT_EQ(ey_multiplicity(2, 3), frac(13, 8));
  EXPECT_EQ(ey_multiplicity(2, 5), frac(361, 144));
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(ey_multiplicity(2, n), hk_multiplicity_2n(n)) << n;
}

TEST(EyMultiplicity, SingleRowIsOne) {
  // With m = 1 the correction sum is empty and n!/n! S(n,n) = 1.
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(ey_multiplicity(1, n), 1);
}

}  // namespace
}  // namespace hkdet
