#include "hkdet/rational_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hkdet {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients)
    : RationalPolynomial(std::vector<Rational>(coefficients)) {}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> coeffs(k + 1, 0);
  coeffs[k] = c;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b)
      out[a + b] += coeffs_[a] * other.coeffs_[b];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "q";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace hkdet
