#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "hkdet/arith.hpp"

namespace hkdet {

/// C(n, k) over arbitrary integers, truncated to 0 when k < 0 or n < k.
Natural binom(std::int64_t n, std::int64_t k);

/// max(a - b, 0)
std::int64_t monus(std::int64_t a, std::int64_t b);
Natural monus(const Natural& a, const Natural& b);

Natural factorial(std::int64_t n);
Natural power(std::int64_t base, std::int64_t exp);

/// Stirling number of the second kind S(n, k): set partitions of an
/// n-set into k nonempty blocks.
Natural stirling2(std::int64_t n, std::int64_t k);

// Binomial-sum identities. Each check evaluates the left side by direct
// summation and compares it exactly against the closed form.

/// sum_{j=0}^{q-1} j C(j+n-1, n-1) = n C(q+n-1, n+1) and
/// sum_{j=1}^{q} j C(q-j+n-1, n-1) = C(q+n, n+1).  Requires q, n >= 1.
std::pair<bool, bool> lemma_sum_check(std::int64_t q, std::int64_t n);

/// The three sums over min{r+1, q-j} for j = 1..q-1: plain, weighted by
/// C(q-1-j+n-1, n-1), and weighted by C(q-1-j+n-1, n).  Requires r < q.
std::array<bool, 3> lemma_min_sums_check(std::int64_t q, std::int64_t r,
                                         std::int64_t n);

/// sum_{j=1}^{q-1} sum_{i=0}^{q-1} min{q-i, q-j} = 2 C(q+1, 3).
bool lemma_double_min_check(std::int64_t q);

/// The two double sums of min{r-i+1, q-j} (j starting at 1, resp. 0).
/// Requires r < q.
std::pair<bool, bool> lemma_other_min_check(std::int64_t q, std::int64_t r);

struct LemmaGridReport {
  bool all_passed = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Runs every identity check over q <= q_max, 1 <= n <= n_max, 0 <= r < q.
LemmaGridReport run_lemma_grid(std::int64_t q_max, std::int64_t n_max);

}  // namespace hkdet
