#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hkdet/arith.hpp"

namespace hkdet {

/// Univariate polynomial in q with exact rational coefficients, stored
/// lowest degree first. The highest stored coefficient is never zero; the
/// zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  /// The monomial q^k.
  static RationalPolynomial monomial(std::size_t k, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  /// Coefficient of q^k (zero past the degree).
  Rational coefficient(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& q) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& c);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }

  bool operator==(const RationalPolynomial& other) const { return coeffs_ == other.coeffs_; }

  /// Human-readable form such as "4/3*q^3 - 1/3*q".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hkdet
