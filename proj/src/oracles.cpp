#include "hkdet/oracles.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "hkdet/binomial.hpp"

namespace hkdet {

ExponentMatrix::ExponentMatrix(int m, int n, std::vector<std::int64_t> cells)
    : m_(m), n_(n), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(m * n))
    throw std::invalid_argument("exponent matrix size mismatch");
}

std::int64_t ExponentMatrix::row_sum(int i) const {
  std::int64_t s = 0;
  for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

std::int64_t ExponentMatrix::col_sum(int j) const {
  std::int64_t s = 0;
  for (int i = 0; i < m_; ++i) s += (*this)(i, j);
  return s;
}

bool is_staircase(const ExponentMatrix& p) {
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) {
      if (p(i, j) == 0) continue;
      for (int i2 = i + 1; i2 < p.rows(); ++i2)
        for (int j2 = j + 1; j2 < p.cols(); ++j2)
          if (p(i2, j2) != 0) return false;
    }
  return true;
}

bool satisfies_row_or_col(const ExponentMatrix& p, std::int64_t q) {
  bool rows_small = true;
  for (int i = 0; i < p.rows() && rows_small; ++i) rows_small = p.row_sum(i) < q;
  if (rows_small) return true;
  for (int j = 0; j < p.cols(); ++j)
    if (p.col_sum(j) >= q) return false;
  return true;
}

namespace {

bool exceeds_budget(std::int64_t q, std::int64_t cells, std::uint64_t budget) {
  std::uint64_t states = 1;
  for (std::int64_t k = 0; k < cells; ++k) {
    if (states > budget / static_cast<std::uint64_t>(q)) return true;
    states *= static_cast<std::uint64_t>(q);
  }
  return states > budget;
}

// Depth-first fill in row-major order. Entry caps: condition (2) makes one
// family of line sums at most q-1, and each entry is bounded by both of its
// line sums, so every entry of a counted matrix lies in [0, q-1].
class Enumerator {
 public:
  Enumerator(const CountQuery& query)
      : q_(query.q),
        m_(query.m),
        n_(query.n),
        rows_(query.rows),
        cols_(query.cols),
        row_sum_(query.m, 0),
        col_sum_(query.n, 0) {}

  std::uint64_t run() {
    leftmost_above_ = n_;
    leftmost_here_ = n_;
    fill(0, 0);
    return count_;
  }

 private:
  bool within(const Bound& b, std::int64_t sum) const { return b.is_infinite() || sum <= b.value(); }

  void fill(int i, int j) {
    if (j == n_) {
      // Row finished: fold its leftmost nonzero column into the running
      // minimum over all rows above.
      const int saved_above = leftmost_above_;
      const int saved_here = leftmost_here_;
      leftmost_above_ = std::min(leftmost_above_, leftmost_here_);
      leftmost_here_ = n_;
      if (i + 1 == m_) {
        finish();
      } else {
        fill(i + 1, 0);
      }
      leftmost_above_ = saved_above;
      leftmost_here_ = saved_here;
      return;
    }
    // A nonzero at (i, j) needs no nonzero strictly north-west of it.
    const std::int64_t top = leftmost_above_ < j ? 0 : q_ - 1;
    for (std::int64_t v = 0; v <= top; ++v) {
      row_sum_[i] += v;
      col_sum_[j] += v;
      if (within(rows_[i], row_sum_[i]) && within(cols_[j], col_sum_[j])) {
        const int saved_here = leftmost_here_;
        if (v != 0 && leftmost_here_ == n_) leftmost_here_ = j;
        fill(i, j + 1);
        leftmost_here_ = saved_here;
      }
      row_sum_[i] -= v;
      col_sum_[j] -= v;
      if (!within(rows_[i], row_sum_[i] + v + 1) || !within(cols_[j], col_sum_[j] + v + 1)) break;
    }
  }

  void finish() {
    bool rows_small = true;
    for (auto s : row_sum_) rows_small = rows_small && s < q_;
    bool cols_small = true;
    for (auto s : col_sum_) cols_small = cols_small && s < q_;
    if (rows_small || cols_small) ++count_;
  }

  std::int64_t q_;
  int m_;
  int n_;
  const std::vector<Bound>& rows_;
  const std::vector<Bound>& cols_;
  std::vector<std::int64_t> row_sum_;
  std::vector<std::int64_t> col_sum_;
  int leftmost_above_ = 0;
  int leftmost_here_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace

Natural brute_count(const CountQuery& query, std::uint64_t budget) {
  validate(query);
  if (query.m < 1 || query.n < 1)
    throw std::invalid_argument("brute_count needs m, n >= 1");
  if (exceeds_budget(query.q, static_cast<std::int64_t>(query.m) * query.n, budget))
    throw BudgetExceeded("enumeration of " + std::to_string(query.q) + "^" +
                         std::to_string(query.m * query.n) +
                         " states exceeds budget " + std::to_string(budget));
  for (const auto& b : query.rows)
    if (b.is_negative()) return 0;
  for (const auto& b : query.cols)
    if (b.is_negative()) return 0;
  Enumerator e(query);
  return Natural(static_cast<unsigned long>(e.run()));
}

Natural alpha(std::int64_t m, std::int64_t d) { return binom(d + m - 1, m - 1); }

Natural alpha_bounded(std::int64_t m, std::int64_t d, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("alpha_bounded needs q >= 1");
  Natural total = 0;
  for (std::int64_t k = 0; k <= m; ++k) {
    const Natural term = binom(m, k) * binom(d - k * q + m - 1, m - 1);
    if (k % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Natural segre_length(std::int64_t m, std::int64_t n, std::int64_t q) {
  if (m < 1 || n < 1 || q < 1)
    throw std::invalid_argument("segre_length needs m, n, q >= 1");
  Natural total = 0;
  for (std::int64_t d = 0; d <= (q - 1) * n; ++d)
    total += alpha(m, d) * alpha_bounded(n, d, q);
  for (std::int64_t d = 0; d <= (q - 1) * m; ++d)
    total += alpha(n, d) * alpha_bounded(m, d, q);
  for (std::int64_t d = 0; d <= (q - 1) * m; ++d)
    total -= alpha_bounded(n, d, q) * alpha_bounded(m, d, q);
  return total;
}

std::vector<CountQuery> brute_battery_queries(int m, int n, std::int64_t q, std::uint64_t seed,
                                              int random_vectors) {
  std::vector<CountQuery> out;
  out.push_back(CountQuery::unbounded(m, n, q));
  out.push_back({m, n, q, std::vector<Bound>(m, Bound::finite(q - 1)),
                 std::vector<Bound>(n, Bound::finite(q - 1))});
  for (std::int64_t value : {std::int64_t{0}, std::int64_t{1}, q - 1}) {
    for (int i = 0; i < m; ++i) {
      auto query = CountQuery::unbounded(m, n, q);
      query.rows[i] = Bound::finite(value);
      out.push_back(std::move(query));
    }
    for (int j = 0; j < n; ++j) {
      auto query = CountQuery::unbounded(m, n, q);
      query.cols[j] = Bound::finite(value);
      out.push_back(std::move(query));
    }
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n),
                    static_cast<std::uint32_t>(q)};
  std::mt19937_64 rng(seq);
  // q + 1 outcomes: 0..q-1 finite, q meaning infinity.
  std::uniform_int_distribution<std::int64_t> pick(0, q);
  auto draw = [&] {
    const std::int64_t v = pick(rng);
    return v == q ? Bound::infinity() : Bound::finite(v);
  };
  for (int k = 0; k < random_vectors; ++k) {
    CountQuery query{m, n, q, {}, {}};
    for (int i = 0; i < m; ++i) query.rows.push_back(draw());
    for (int j = 0; j < n; ++j) query.cols.push_back(draw());
    out.push_back(std::move(query));
  }
  return out;
}

BatteryReport run_brute_battery(int max_mn, std::int64_t max_q, std::uint64_t seed,
                                std::uint64_t budget) {
  if (max_mn < 1 || max_q < 1) throw std::invalid_argument("battery limits must be positive");
  if (exceeds_budget(max_q, static_cast<std::int64_t>(max_mn) * max_mn, budget))
    throw BudgetExceeded("brute-force battery up to " + std::to_string(max_mn) + "x" +
                         std::to_string(max_mn) + ", q=" + std::to_string(max_q) +
                         " exceeds enumeration budget " + std::to_string(budget));
  BatteryReport report{"brute-vs-recursion", true, 0, std::nullopt};
  StaircaseCounter counter;
  for (int m = 1; m <= max_mn; ++m)
    for (int n = 1; n <= max_mn; ++n)
      for (std::int64_t q = 1; q <= max_q; ++q)
        for (const auto& query : brute_battery_queries(m, n, q, seed)) {
          ++report.checks;
          const Natural expected = brute_count(query, budget);
          const Natural got = counter.count(query);
          if (expected != got && report.passed) {
            report.passed = false;
            report.first_mismatch = describe(query) + ": brute " + expected.get_str() +
                                    ", recursion " + got.get_str();
          }
        }
  return report;
}

BatteryReport run_segre_battery(int max_mn, std::int64_t max_q) {
  if (max_mn < 1 || max_q < 1) throw std::invalid_argument("battery limits must be positive");
  BatteryReport report{"segre-vs-recursion", true, 0, std::nullopt};
  StaircaseCounter counter;
  for (int m = 1; m <= max_mn; ++m)
    for (int n = 1; n <= max_mn; ++n)
      for (std::int64_t q = 1; q <= max_q; ++q) {
        ++report.checks;
        const Natural expected = segre_length(m, n, q);
        const Natural got = counter.hilbert_kunz(m, n, q);
        if (expected != got && report.passed) {
          report.passed = false;
          report.first_mismatch = "HK(" + std::to_string(m) + "," + std::to_string(n) + ") at q=" +
                                  std::to_string(q) + ": segre " + expected.get_str() +
                                  ", recursion " + got.get_str();
        }
      }
  return report;
}

}  // namespace hkdet
