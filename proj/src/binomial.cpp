#include "hkdet/binomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkdet {

Natural binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  Natural out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::int64_t monus(std::int64_t a, std::int64_t b) { return a > b ? a - b : 0; }

Natural monus(const Natural& a, const Natural& b) {
  if (a > b) return a - b;
  return 0;
}

Natural factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Natural power(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Natural out;
  mpz_class b(static_cast<long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

Natural stirling2(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2 needs n, k >= 0");
  if (k > n) return 0;
  // row[j] holds S(i, j) for the current i.
  std::vector<Natural> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = std::min(i, k); j >= 1; --j) {
      row[j] = j * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

std::pair<bool, bool> lemma_sum_check(std::int64_t q, std::int64_t n) {
  if (q < 1 || n < 1) throw std::invalid_argument("lemma_sum_check needs q, n >= 1");
  Natural first = 0;
  for (std::int64_t j = 0; j <= q - 1; ++j) first += j * binom(j + n - 1, n - 1);
  Natural second = 0;
  for (std::int64_t j = 1; j <= q; ++j) second += j * binom(q - j + n - 1, n - 1);
  return {first == n * binom(q + n - 1, n + 1), second == binom(q + n, n + 1)};
}

std::array<bool, 3> lemma_min_sums_check(std::int64_t q, std::int64_t r,
                                         std::int64_t n) {
  if (r >= q) throw std::invalid_argument("lemma_min_sums_check needs r < q");
  Natural plain = 0, weighted_low = 0, weighted_high = 0;
  for (std::int64_t j = 1; j <= q - 1; ++j) {
    const std::int64_t w = std::min(r + 1, q - j);
    plain += w;
    weighted_low += w * binom(q - 1 - j + n - 1, n - 1);
    weighted_high += w * binom(q - 1 - j + n - 1, n);
  }
  const Natural plain_a = (q - 1) * (r + 1) - binom(r + 1, 2);
  const Natural plain_b = q * (r + 1) - binom(r + 2, 2);
  const Natural low = (r + 1) * binom(q + n - 2, n) - binom(r + n, n + 1);
  const Natural high = (r + 1) * binom(q + n - 2, n + 1) -
                       (r - 1) * binom(r + n - 1, n + 1) +
                       (n + 1) * binom(r + n - 1, n + 2);
  return {plain == plain_a && plain == plain_b, weighted_low == low,
          weighted_high == high};
}

bool lemma_double_min_check(std::int64_t q) {
  if (q < 0) throw std::invalid_argument("lemma_double_min_check needs q >= 0");
  Natural total = 0;
  for (std::int64_t j = 1; j <= q - 1; ++j)
    for (std::int64_t i = 0; i <= q - 1; ++i) total += std::min(q - i, q - j);
  return total == 2 * binom(q + 1, 3);
}

std::pair<bool, bool> lemma_other_min_check(std::int64_t q, std::int64_t r) {
  if (r >= q) throw std::invalid_argument("lemma_other_min_check needs r < q");
  Natural from_one = 0, from_zero = 0;
  for (std::int64_t i = 0; i <= r; ++i) {
    for (std::int64_t j = 0; j <= q - 1; ++j) {
      const std::int64_t v = std::min(r - i + 1, q - j);
      from_zero += v;
      if (j >= 1) from_one += v;
    }
  }
  return {from_one == q * binom(r + 2, 2) - binom(r + 3, 3),
          from_zero == q * binom(r + 2, 2) - binom(r + 2, 3)};
}

namespace {

void record(LemmaGridReport& report, bool ok, const std::string& what) {
  ++report.checks;
  if (ok) return;
  ++report.failures;
  if (report.all_passed) report.first_failure = what;
  report.all_passed = false;
}

}  // namespace

LemmaGridReport run_lemma_grid(std::int64_t q_max, std::int64_t n_max) {
  LemmaGridReport report;
  for (std::int64_t q = 0; q <= q_max; ++q) {
    record(report, lemma_double_min_check(q),
           "double_min q=" + std::to_string(q));
    if (q == 0) continue;
    for (std::int64_t r = 0; r < q; ++r) {
      auto [a, b] = lemma_other_min_check(q, r);
      record(report, a && b,
             "other_min q=" + std::to_string(q) + " r=" + std::to_string(r));
    }
    for (std::int64_t n = 1; n <= n_max; ++n) {
      auto [a, b] = lemma_sum_check(q, n);
      record(report, a && b,
             "sum q=" + std::to_string(q) + " n=" + std::to_string(n));
      for (std::int64_t r = 0; r < q; ++r) {
        auto flags = lemma_min_sums_check(q, r, n);
        record(report, flags[0] && flags[1] && flags[2],
               "min_sums q=" + std::to_string(q) + " r=" + std::to_string(r) +
                   " n=" + std::to_string(n));
      }
    }
  }
  return report;
}

}  // namespace hkdet
