#include "hkdet/poly_fit.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "hkdet/counting.hpp"

namespace hkdet {

RationalPolynomial interpolate(const std::vector<Sample>& samples, std::size_t degree_cap) {
  const std::size_t k = degree_cap + 1;
  if (samples.size() < k)
    throw std::invalid_argument("interpolation needs " + std::to_string(k) +
                                " samples, got " + std::to_string(samples.size()));
  std::set<std::int64_t> seen;
  for (const auto& s : samples)
    if (!seen.insert(s.q).second)
      throw std::invalid_argument("repeated sample point q=" + std::to_string(s.q));

  // Divided differences, in place: after pass `level`, diff[i] holds
  // f[x_{i-level}, ..., x_i].
  std::vector<Rational> diff;
  diff.reserve(k);
  for (std::size_t i = 0; i < k; ++i) diff.emplace_back(samples[i].value);
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) /
                Rational(samples[i].q - samples[i - level].q);
      if (i == level) break;
    }

  // Horner on the Newton form.
  RationalPolynomial poly = RationalPolynomial::constant(diff[k - 1]);
  for (std::size_t i = k - 1; i-- > 0;) {
    poly *= RationalPolynomial{Rational(-samples[i].q), Rational(1)};
    poly += RationalPolynomial::constant(diff[i]);
  }

  for (std::size_t i = k; i < samples.size(); ++i) {
    if (poly(Rational(samples[i].q)) != Rational(samples[i].value))
      throw VerificationError("interpolant of degree <= " + std::to_string(degree_cap) +
                              " mismatches sample at q=" + std::to_string(samples[i].q));
  }
  return poly;
}

RationalPolynomial hk_polynomial(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  const int dim = m + n - 1;
  std::vector<Sample> samples;
  for (std::int64_t q = 1; q <= m + n + 3; ++q) samples.push_back({q, hilbert_kunz(m, n, q)});
  return interpolate(samples, static_cast<std::size_t>(dim));
}

Rational multiplicity(int m, int n) {
  return hk_polynomial(m, n).coefficient(static_cast<std::size_t>(m + n - 1));
}

}  // namespace hkdet
