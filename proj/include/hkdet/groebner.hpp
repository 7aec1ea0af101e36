#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hkdet/arith.hpp"

namespace hkdet {

/// Position x_{i,j} of the generic matrix, zero-based.
struct VarIndex {
  int i = 0;
  int j = 0;
  bool operator==(const VarIndex&) const = default;
};

/// Sparse monomial: (linear variable index, exponent) pairs sorted by index,
/// zero exponents never stored. Variables are linearized row-major, so index
/// 0 is x_{1,1}.
///
/// The built-in ordering is lexicographic with x_{1,1} > x_{1,2} > ... >
/// x_{m,n}; it depends only on the linear index and therefore agrees with
/// DiagonalLexOrder for every matrix shape.
class Monomial {
 public:
  using Term = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);
  /// Dense exponent vector, one entry per linear variable index.
  static Monomial from_dense(const std::vector<std::uint32_t>& exps);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }
  std::uint32_t exponent(std::uint32_t var) const;
  std::uint64_t degree() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / divisor; the divisor must divide this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;

  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  /// e.g. "x{1,1}^2*x{2,3}" for an n-column matrix; "1" for the unit.
  std::string to_string(int n) const;

 private:
  std::vector<Term> terms_;
};

/// Lexicographic order with x_{1,1} > x_{1,2} > ... > x_{1,n} > x_{2,1} >
/// ... > x_{m,n}. Construction checks that it is diagonal: every 2 x 2
/// minor leads with its main-diagonal product.
class DiagonalLexOrder {
 public:
  DiagonalLexOrder(int m, int n);

  int rows() const { return m_; }
  int cols() const { return n_; }
  std::uint32_t var(int i, int j) const { return static_cast<std::uint32_t>(i * n_ + j); }
  VarIndex index(std::uint32_t var) const { return {static_cast<int>(var) / n_, static_cast<int>(var) % n_}; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return a <=> b; }

 private:
  int m_;
  int n_;
};

/// Polynomial with exact rational coefficients, terms kept in decreasing
/// monomial order so the first term is the leading one.
class TermPolynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<Monomial>>;

  TermPolynomial() = default;
  static TermPolynomial from_monomial(const Monomial& mono, const Rational& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& mono, const Rational& coeff);
  /// this -= coeff * mono * other
  void subtract_multiple(const Rational& coeff, const Monomial& mono, const TermPolynomial& other);

  bool operator==(const TermPolynomial&) const = default;
  std::string to_string(int n) const;

 private:
  Terms terms_;
};

enum class StairConfiguration {
  ROW_RIGHT_COL_DOWN,  // row arm right of the pivot, column arm below it
  ROW_LEFT_COL_UP,     // row arm left of the pivot, column arm above it
};

/// One way of writing a q-stair monomial: pivot (c, d), its configuration,
/// and the exponents on the pivot and each arm cell.
struct QStairDescriptor {
  int c = 0;
  int d = 0;
  std::int64_t q = 1;
  StairConfiguration configuration = StairConfiguration::ROW_RIGHT_COL_DOWN;
  std::uint32_t pivot_exponent = 0;
  std::vector<std::pair<VarIndex, std::uint32_t>> arm_exponents;

  Monomial monomial(const DiagonalLexOrder& order) const;
};

inline constexpr std::uint64_t kDefaultStairBudget = 1'000'000;

/// Every descriptor, in pivot-major order. Throws BudgetExceeded past `budget`.
std::vector<QStairDescriptor> enumerate_q_stair_descriptors(
    int m, int n, std::int64_t q, std::uint64_t budget = kDefaultStairBudget);

/// Every distinct q-stair monomial.
std::set<Monomial> generate_q_stairs(int m, int n, std::int64_t q,
                                     std::uint64_t budget = kDefaultStairBudget);

/// The q-stair monomials not divisible by another q-stair monomial: the
/// pure powers x_{i,j}^q and the stairs whose exponents are all below q.
std::set<Monomial> minimal_q_stairs(int m, int n, std::int64_t q,
                                    std::uint64_t budget = kDefaultStairBudget);

/// x_{a,b} x_{a',b'} - x_{a',b} x_{a,b'} for a < a', b < b'.
std::vector<TermPolynomial> minors(int m, int n);

/// The minors followed by the minimal q-stair monomials in decreasing order.
std::vector<TermPolynomial> predicted_basis(int m, int n, std::int64_t q,
                                            std::uint64_t budget = kDefaultStairBudget);

/// Full multivariate division. When several basis elements divide the
/// current term, the one with the largest leading monomial wins, ties going
/// to the lowest index.
TermPolynomial reduce(const TermPolynomial& f, const std::vector<TermPolynomial>& basis,
                      const DiagonalLexOrder& order);

TermPolynomial s_polynomial(const TermPolynomial& f, const TermPolynomial& g);

struct GroebnerReport {
  int m = 0;
  int n = 0;
  std::int64_t q = 1;
  std::size_t q_stairs = 0;          // distinct q-stair monomials
  std::size_t redundant_stairs = 0;  // multiples of a pure power x^q
  std::size_t basis_stairs = 0;
  std::size_t minor_count = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_coprime = 0;
  bool s_pairs_ok = true;
  bool minimal = true;
  bool reduced = true;
  /// Indices into predicted_basis of the first failing S-pair.
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  std::string detail;

  bool passed() const { return s_pairs_ok && minimal && reduced; }
};

/// Buchberger's criterion over predicted_basis, plus minimality and
/// reducedness of its leading terms.
GroebnerReport verify_groebner(int m, int n, std::int64_t q,
                               std::uint64_t budget = kDefaultStairBudget);

/// Monomials with exponents in [0, q-1] divisible by no leading monomial of
/// predicted_basis. Throws BudgetExceeded when q^(m n) exceeds `budget`.
Natural standard_monomial_count(int m, int n, std::int64_t q,
                                std::uint64_t budget = 100'000'000);

}  // namespace hkdet
