#include "hkdet/counting.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "hkdet/binomial.hpp"

namespace hkdet {

std::optional<Bound> Bound::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return Bound::infinity();
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    return std::nullopt;
  return Bound::finite(v);
}

CountQuery CountQuery::unbounded(int m, int n, std::int64_t q) {
  return CountQuery{m, n, q, std::vector<Bound>(static_cast<std::size_t>(std::max(m, 0))),
                    std::vector<Bound>(static_cast<std::size_t>(std::max(n, 0)))};
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(key.q);
  auto mix = [&h](std::int64_t v) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(key.m);
  mix(key.n);
  for (const auto& b : key.rows) mix(b.raw());
  mix(-7);
  for (const auto& b : key.cols) mix(b.raw());
  return h;
}

void validate(const CountQuery& query) {
  if (query.q < 1) throw std::invalid_argument("q must be at least 1");
  if (query.m < 0 || query.n < 0)
    throw std::invalid_argument("matrix dimensions must be nonnegative");
  if (query.rows.size() != static_cast<std::size_t>(query.m))
    throw std::invalid_argument("expected " + std::to_string(query.m) +
                                " row bounds, got " +
                                std::to_string(query.rows.size()));
  if (query.cols.size() != static_cast<std::size_t>(query.n))
    throw std::invalid_argument("expected " + std::to_string(query.n) +
                                " column bounds, got " +
                                std::to_string(query.cols.size()));
}

namespace {

// A finite cap above k(q-1) never binds: one family of line sums is at most
// q-1, so every entry is, and a line of k entries sums to at most k(q-1).
Bound clamp_bound(Bound b, int line_length, std::int64_t q) {
  if (b.is_finite() && b.value() > static_cast<std::int64_t>(line_length) * (q - 1))
    return Bound::infinity();
  return b;
}

CanonicalKey make_key(int m, int n, std::int64_t q, std::vector<Bound> rows,
                      std::vector<Bound> cols) {
  if (m > n) {
    std::swap(m, n);
    std::swap(rows, cols);
  }
  for (auto& b : rows) b = clamp_bound(b, n, q);
  for (auto& b : cols) b = clamp_bound(b, m, q);
  return CanonicalKey{m, n, q, std::move(rows), std::move(cols)};
}

std::int64_t capped(Bound b, std::int64_t cap) {
  return b.is_infinite() ? cap : std::min(b.value(), cap);
}

}  // namespace

CanonicalKey canonicalize(const CountQuery& query) {
  validate(query);
  return make_key(query.m, query.n, query.q, query.rows, query.cols);
}

std::string describe(const CountQuery& query) {
  auto join = [](const std::vector<Bound>& bounds) {
    std::string out;
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      if (k) out += ",";
      out += bounds[k].to_string();
    }
    return out;
  };
  return "N_" + std::to_string(query.q) + "(" + std::to_string(query.m) + "," +
         std::to_string(query.n) + "; " + join(query.rows) + "; " + join(query.cols) + ")";
}

Natural StaircaseCounter::count(const CountQuery& query) {
  validate(query);
  return eval(query.m, query.n, query.q, query.rows, query.cols);
}

Natural StaircaseCounter::hilbert_kunz(int m, int n, std::int64_t q) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  return count(CountQuery::unbounded(m, n, q));
}

Natural StaircaseCounter::eval(int m, int n, std::int64_t q, std::vector<Bound> rows,
                               std::vector<Bound> cols) {
  auto negative = [](const Bound& b) { return b.is_negative(); };
  if (std::any_of(rows.begin(), rows.end(), negative) ||
      std::any_of(cols.begin(), cols.end(), negative))
    return 0;
  if (m == 0 || n == 0) return 1;

  CanonicalKey key = make_key(m, n, q, std::move(rows), std::move(cols));
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Natural value = key.m == 1 ? single_row(q, key.rows.front(), key.cols) : recurse(key);
  cache_.emplace(std::move(key), value);
  return value;
}

Natural StaircaseCounter::single_row(std::int64_t q, Bound r,
                                     const std::vector<Bound>& cols) {
  const auto n = static_cast<std::int64_t>(cols.size());
  if (r.is_infinite()) {
    Natural product = 1;
    for (const auto& c : cols) product *= capped(c, q - 1) + 1;
    return product;
  }
  const std::int64_t rv = r.value();
  if (rv < q && std::all_of(cols.begin(), cols.end(),
                            [rv](const Bound& c) { return !c.at_most(rv - 1); }))
    return binom(rv + n, n);

  // Nested sums over i_1, ..., i_{n-1}, each truncated at
  // min{c_k, remaining row budget, q-1}; the innermost term is
  // min{remaining+1, c_n+1, q}. inner[rem] tabulates the sum over the
  // columns to the right for each remaining budget.
  std::vector<Natural> inner(static_cast<std::size_t>(rv) + 1);
  for (std::int64_t rem = 0; rem <= rv; ++rem)
    inner[rem] = std::min({rem + 1, capped(cols.back(), q - 1) + 1, q});
  for (std::int64_t k = n - 2; k >= 0; --k) {
    std::vector<Natural> outer(inner.size(), 0);
    for (std::int64_t rem = 0; rem <= rv; ++rem) {
      const std::int64_t top = std::min(capped(cols[k], q - 1), rem);
      for (std::int64_t i = 0; i <= top; ++i) outer[rem] += inner[rem - i];
    }
    inner = std::move(outer);
  }
  return inner[rv];
}

Natural StaircaseCounter::recurse(const CanonicalKey& key) {
  const int m = key.m;
  const int n = key.n;
  const std::int64_t q = key.q;
  const std::int64_t q1 = q - 1;
  const auto& r = key.rows;
  const auto& c = key.cols;

  const std::vector<Bound> rest_cols(c.begin() + 1, c.end());
  std::vector<Bound> rest_cols_capped = rest_cols;
  for (auto& b : rest_cols_capped) b = b.clamp_to(q1);

  // Column 1 empty.
  Natural total = eval(m, n - 1, q, r, rest_cols);

  // i is the topmost row with a nonzero entry in column 1, j that entry.
  for (int i = 1; i <= m; ++i) {
    const std::vector<Bound> below(r.begin() + i, r.end());
    const std::int64_t ri_capped = capped(r[i - 1], q1);
    for (std::int64_t j = 1; j <= ri_capped; ++j) {
      // Column 1 sums to q or more: every row must stay below q.
      if (i <= m - 1) {
        const Natural col_ways =
            monus(eval(m - i, 1, q, below, {c[0].minus(j)}),
                  eval(m - i, 1, q, below, {Bound::finite(q1 - j)}));
        if (col_ways != 0) {
          std::vector<Bound> upper;
          upper.reserve(i);
          for (int k = 0; k < i - 1; ++k) upper.push_back(r[k].clamp_to(q1));
          upper.push_back(Bound::finite(ri_capped - j));
          total += col_ways * eval(i, n - 1, q, std::move(upper), rest_cols);
        }
      }

      const Natural col_small =
          eval(m - i, 1, q, below, {c[0].clamp_to(q1).minus(j)});
      if (col_small == 0) continue;

      std::vector<Bound> upper(r.begin(), r.begin() + (i - 1));
      upper.push_back(r[i - 1].minus(j));
      // Row i reaches q: every column must stay below q.
      Natural row_big = eval(i, n - 1, q, upper, rest_cols_capped);
      upper.back() = Bound::finite(q1 - j);
      row_big = monus(row_big, eval(i, n - 1, q, upper, rest_cols_capped));
      // Column 1 and row i both below q: no further restriction.
      upper.back() = Bound::finite(ri_capped - j);
      const Natural both_small = eval(i, n - 1, q, std::move(upper), rest_cols);

      total += col_small * (row_big + both_small);
    }
  }
  return total;
}

namespace {

StaircaseCounter& thread_counter() {
  thread_local StaircaseCounter counter;
  return counter;
}

}  // namespace

Natural count(const CountQuery& query) { return thread_counter().count(query); }

Natural hilbert_kunz(int m, int n, std::int64_t q) {
  return thread_counter().hilbert_kunz(m, n, q);
}

}  // namespace hkdet
