#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace hkdet {

/// Cap on a row or column sum: a finite integer or infinity.
class Bound {
 public:
  constexpr Bound() = default;  // infinity

  static constexpr Bound infinity() { return Bound(); }
  static constexpr Bound finite(std::int64_t v) { return Bound(v); }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr bool is_finite() const { return value_ != kInf; }
  constexpr bool is_negative() const { return value_ < 0; }
  /// Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  constexpr Bound minus(std::int64_t k) const {
    return is_infinite() ? *this : Bound(value_ - k);
  }
  constexpr Bound clamp_to(std::int64_t cap) const {
    return Bound(std::min(value_, cap));
  }
  /// Comparisons treat infinity as larger than every finite value.
  constexpr bool at_most(std::int64_t v) const { return value_ <= v; }

  /// Raw key for hashing; infinity maps to INT64_MAX.
  constexpr std::int64_t raw() const { return value_; }

  constexpr auto operator<=>(const Bound&) const = default;

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }
  /// Accepts "inf" or a (possibly negative) decimal integer.
  static std::optional<Bound> parse(std::string_view text);

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  constexpr explicit Bound(std::int64_t v) : value_(v) {}
  std::int64_t value_ = kInf;
};

}  // namespace hkdet
