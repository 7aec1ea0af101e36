#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hkdet {

// Counts are nonnegative by construction; the alias documents intent.
using Natural = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const mpz_class& z) { return z.get_str(); }
inline std::string to_string(const mpq_class& r) { return r.get_str(); }

// Raised when an exhaustive enumeration would exceed its state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exact cross-check fails (interpolation guard, etc.).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hkdet
