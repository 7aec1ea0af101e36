#include "hkdet/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "hkdet/binomial.hpp"

namespace hkdet {

std::string_view name(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::INF_QM1: return "INF_QM1";
    case ClosedFormId::INF_R_INF: return "INF_R_INF";
    case ClosedFormId::INF_R_QM1: return "INF_R_QM1";
    case ClosedFormId::HK_2N: return "HK_2N";
    case ClosedFormId::MULT_2N: return "MULT_2N";
    case ClosedFormId::INF_R_INFQM1: return "INF_R_INFQM1";
    case ClosedFormId::QM1_R_QM1: return "QM1_R_QM1";
    case ClosedFormId::QM1_R_INF: return "QM1_R_INF";
  }
  return "?";
}

bool uses_r(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::INF_R_INF:
    case ClosedFormId::INF_R_QM1:
    case ClosedFormId::INF_R_INFQM1:
    case ClosedFormId::QM1_R_QM1:
    case ClosedFormId::QM1_R_INF:
      return true;
    default:
      return false;
  }
}

CountQuery matching_query(ClosedFormId id, int n, std::int64_t q, std::int64_t r) {
  const Bound inf = Bound::infinity();
  const Bound qm1 = Bound::finite(q - 1);
  const Bound rb = Bound::finite(r);
  auto cols_all = [n](Bound b) { return std::vector<Bound>(static_cast<std::size_t>(n), b); };
  switch (id) {
    case ClosedFormId::INF_QM1: return {2, n, q, {inf, inf}, cols_all(qm1)};
    case ClosedFormId::INF_R_INF: return {2, n, q, {inf, rb}, cols_all(inf)};
    case ClosedFormId::INF_R_QM1: return {2, n, q, {inf, rb}, cols_all(qm1)};
    case ClosedFormId::HK_2N: return {2, n, q, {inf, inf}, cols_all(inf)};
    case ClosedFormId::INF_R_INFQM1: {
      auto cols = cols_all(qm1);
      cols.front() = inf;
      return {2, n, q, {inf, rb}, std::move(cols)};
    }
    case ClosedFormId::QM1_R_QM1: return {2, n, q, {qm1, rb}, cols_all(qm1)};
    case ClosedFormId::QM1_R_INF: return {2, n, q, {qm1, rb}, cols_all(inf)};
    case ClosedFormId::MULT_2N: break;
  }
  throw std::invalid_argument("MULT_2N has no matching count query");
}

namespace {

// sum_{i=1}^{n-1} C(q+i-1, i+1) C(r+n-i, n-i)
Natural staircase_tail(int n, std::int64_t q, std::int64_t r) {
  Natural total = 0;
  for (int i = 1; i <= n - 1; ++i) total += binom(q + i - 1, i + 1) * binom(r + n - i, n - i);
  return total;
}

Rational whole(const Natural& v) { return Rational(v); }

}  // namespace

Rational eval_closed_form(ClosedFormId id, int n, std::int64_t q,
                          std::optional<std::int64_t> r) {
  if (n < 2) throw std::invalid_argument("closed forms need n >= 2");
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  std::int64_t rv = 0;
  if (uses_r(id)) {
    if (!r) throw std::invalid_argument(std::string(name(id)) + " needs r");
    rv = *r;
    if (rv < 0) throw std::invalid_argument("r must be nonnegative");
    if (rv >= q) throw std::invalid_argument("closed forms need r < q");
  }
  switch (id) {
    case ClosedFormId::INF_QM1:
      return whole(power(q, n + 1) + (n - 2) * power(q, n - 1) * binom(q, 2));
    case ClosedFormId::INF_R_INF:
      return whole((n - 1) * binom(rv + n, n + 1) + (rv + 1) * power(q, n));
    case ClosedFormId::INF_R_QM1:
      return whole((rv + 1) * power(q, n) - binom(rv + n, n + 1));
    case ClosedFormId::HK_2N:
      return make_rational(n * power(q, n + 1) - (n - 2) * power(q, n), 2) +
             whole(n * binom(n + q - 1, n + 1));
    case ClosedFormId::MULT_2N:
      return hk_multiplicity_2n(n);
    case ClosedFormId::INF_R_INFQM1:
      return whole(power(q, n) * (rv + 1));
    case ClosedFormId::QM1_R_QM1:
      return whole(q * binom(rv + n, n) + staircase_tail(n, q, rv) -
                   n * binom(rv + n, n + 1));
    case ClosedFormId::QM1_R_INF:
      return whole(q * binom(rv + n, n) + staircase_tail(n, q, rv));
  }
  throw std::invalid_argument("unknown closed form");
}

RationalPolynomial hk_polynomial_2n(int n) {
  if (n < 2) throw std::invalid_argument("hk_polynomial_2n needs n >= 2");
  // (n q^{n+1} - (n-2) q^n) / 2
  RationalPolynomial poly = RationalPolynomial::monomial(n + 1, make_rational(n, 2)) -
                            RationalPolynomial::monomial(n, make_rational(n - 2, 2));
  // n C(q+n-1, n+1) = n (q-1) q (q+1) ... (q+n-1) / (n+1)!
  RationalPolynomial falling = RationalPolynomial::constant(1);
  for (int k = -1; k <= n - 1; ++k) falling *= RationalPolynomial{Rational(k), Rational(1)};
  falling *= make_rational(n, factorial(n + 1));
  return poly + falling;
}

Rational hk_multiplicity_2n(int n) {
  if (n < 2) throw std::invalid_argument("hk_multiplicity_2n needs n >= 2");
  return make_rational(n, 2) + make_rational(n, factorial(n + 1));
}

Rational ey_multiplicity(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  const std::int64_t d = m + n - 1;
  const Natural d_fact = factorial(d);
  const Rational value = make_rational(factorial(n) * stirling2(d, n), d_fact);
  Natural correction = 0;
  for (int r = 1; r <= m - 1; ++r)
    for (int s = 1; s <= m - r; ++s) {
      const Natural term = binom(m, r + s) * binom(n, s) * power(s, d);
      if ((m + r) % 2 == 0)
        correction += term;
      else
        correction -= term;
    }
  return value - make_rational(correction, d_fact);
}

}  // namespace hkdet
