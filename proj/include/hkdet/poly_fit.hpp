#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hkdet/arith.hpp"
#include "hkdet/rational_polynomial.hpp"

namespace hkdet {

struct Sample {
  std::int64_t q;
  Natural value;
};

/// Newton interpolation through the first degree_cap + 1 samples, then an
/// exact check against every remaining sample. Throws std::invalid_argument
/// on too few or repeated q values, VerificationError on a mismatch.
RationalPolynomial interpolate(const std::vector<Sample>& samples, std::size_t degree_cap);

/// The Hilbert-Kunz function of the m x n determinantal ring as a
/// polynomial in q, fitted to exact counts at q = 1..m+n+3.
RationalPolynomial hk_polynomial(int m, int n);

/// Coefficient of q^(m+n-1) in hk_polynomial(m, n).
Rational multiplicity(int m, int n);

}  // namespace hkdet
