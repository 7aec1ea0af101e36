#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkdet/arith.hpp"
#include "hkdet/counting.hpp"

namespace hkdet {

/// Row-major m x n grid of exponents p_{i,j}.
class ExponentMatrix {
 public:
  ExponentMatrix(int m, int n) : m_(m), n_(n), cells_(static_cast<std::size_t>(m * n), 0) {}
  ExponentMatrix(int m, int n, std::vector<std::int64_t> cells);

  int rows() const { return m_; }
  int cols() const { return n_; }
  std::int64_t operator()(int i, int j) const { return cells_[i * n_ + j]; }
  std::int64_t& operator()(int i, int j) { return cells_[i * n_ + j]; }

  std::int64_t row_sum(int i) const;
  std::int64_t col_sum(int j) const;

 private:
  int m_;
  int n_;
  std::vector<std::int64_t> cells_;
};

/// No two nonzero cells (i,j), (i',j') with i < i' and j < j'.
bool is_staircase(const ExponentMatrix& p);

/// Every row sum < q, or every column sum < q.
bool satisfies_row_or_col(const ExponentMatrix& p, std::int64_t q);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Exhaustive count of the matrices described by `query`. Refuses with
/// BudgetExceeded when q^(m n) exceeds `budget`.
Natural brute_count(const CountQuery& query,
                    std::uint64_t budget = kDefaultEnumerationBudget);

/// Monomials of degree d in m variables.
Natural alpha(std::int64_t m, std::int64_t d);

/// Monomials of degree d in m variables with every exponent < q.
Natural alpha_bounded(std::int64_t m, std::int64_t d, std::int64_t q);

/// Colength via the Segre-product degree sums.
Natural segre_length(std::int64_t m, std::int64_t n, std::int64_t q);

/// Outcome of one oracle-versus-recursion sweep.
struct BatteryReport {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::optional<std::string> first_mismatch;
};

/// Bound vectors tested against brute_count for one shape: all infinite,
/// all q-1, each single bound set to 0, 1 and q-1 with the rest infinite,
/// and `random_vectors` vectors drawn from {0, ..., q-1, inf}. The random
/// draws depend only on (seed, m, n, q).
std::vector<CountQuery> brute_battery_queries(int m, int n, std::int64_t q, std::uint64_t seed,
                                              int random_vectors = 50);

/// brute_count against count over m, n <= max_mn and q <= max_q. Throws
/// BudgetExceeded up front when the largest shape would exceed `budget`.
BatteryReport run_brute_battery(int max_mn, std::int64_t max_q, std::uint64_t seed,
                                std::uint64_t budget = kDefaultEnumerationBudget);

/// segre_length against hilbert_kunz over m, n <= max_mn and q <= max_q.
BatteryReport run_segre_battery(int max_mn, std::int64_t max_q);

}  // namespace hkdet
