#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hkdet/arith.hpp"
#include "hkdet/bound.hpp"

namespace hkdet {

/// One value N_q(m, n; rows; cols): the number of staircase exponent
/// matrices whose row sums respect `rows`, column sums respect `cols`, and
/// with either every row sum < q or every column sum < q.
struct CountQuery {
  int m = 0;
  int n = 0;
  std::int64_t q = 1;
  std::vector<Bound> rows;
  std::vector<Bound> cols;

  static CountQuery unbounded(int m, int n, std::int64_t q);
};

/// Memo key: transposed so that m <= n, and with every finite bound that
/// exceeds the largest attainable line sum replaced by infinity.
struct CanonicalKey {
  int m = 0;
  int n = 0;
  std::int64_t q = 1;
  std::vector<Bound> rows;
  std::vector<Bound> cols;

  bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept;
};

/// Throws std::invalid_argument for q < 1, m < 0, n < 0 or bound vectors
/// whose lengths disagree with m and n.
void validate(const CountQuery& query);

CanonicalKey canonicalize(const CountQuery& query);

/// "N_3(2,2; inf,1; 1,1)"
std::string describe(const CountQuery& query);

/// Memoized evaluator for N_q. Not thread-safe; give each thread its own
/// instance (the free functions below do this).
class StaircaseCounter {
 public:
  Natural count(const CountQuery& query);
  Natural hilbert_kunz(int m, int n, std::int64_t q);

  std::size_t cache_size() const { return cache_.size(); }
  void clear() { cache_.clear(); }

 private:
  Natural eval(int m, int n, std::int64_t q, std::vector<Bound> rows,
               std::vector<Bound> cols);
  Natural single_row(std::int64_t q, Bound r, const std::vector<Bound>& cols);
  Natural recurse(const CanonicalKey& key);

  std::unordered_map<CanonicalKey, Natural, CanonicalKeyHash> cache_;
};

/// Convenience wrappers backed by a thread-local StaircaseCounter.
Natural count(const CountQuery& query);
Natural hilbert_kunz(int m, int n, std::int64_t q);

}  // namespace hkdet
