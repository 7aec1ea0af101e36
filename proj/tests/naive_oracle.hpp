#pragma once

// Test-only reference: walks every matrix in [0, q-1]^(m n) with an
// odometer and applies the defining conditions literally. Shares no code
// with the library's enumerator.

#include <cstdint>
#include <vector>

#include "hkdet/counting.hpp"

namespace hkdet::testing {

inline std::uint64_t naive_count(const CountQuery& query) {
  const int m = query.m, n = query.n;
  const std::int64_t q = query.q;
  std::vector<std::int64_t> p(static_cast<std::size_t>(m * n), 0);
  auto at = [&](int i, int j) { return p[i * n + j]; };
  auto fits = [](const Bound& b, std::int64_t s) { return b.is_infinite() || s <= b.value(); };
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int i2 = i + 1; i2 < m && ok; ++i2)
          for (int j2 = j + 1; j2 < n && ok; ++j2)
            if (at(i, j) * at(i2, j2) != 0) ok = false;
    bool rows_small = true, cols_small = true;
    for (int i = 0; i < m && ok; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n; ++j) s += at(i, j);
      ok = fits(query.rows[i], s);
      rows_small = rows_small && s < q;
    }
    for (int j = 0; j < n && ok; ++j) {
      std::int64_t s = 0;
      for (int i = 0; i < m; ++i) s += at(i, j);
      ok = fits(query.cols[j], s);
      cols_small = cols_small && s < q;
    }
    if (ok && (rows_small || cols_small)) ++total;
    std::size_t k = 0;
    while (k < p.size() && p[k] == q - 1) p[k++] = 0;
    if (k == p.size()) break;
    ++p[k];
  }
  return total;
}

}  // namespace hkdet::testing
