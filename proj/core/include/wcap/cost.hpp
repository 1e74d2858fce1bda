#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wcap {

/// Exact nonnegative-or-signed rational with 64-bit numerator/denominator.
///
/// Always stored reduced with a positive denominator. Arithmetic goes through
/// 128-bit intermediates and throws Errc::Overflow if the reduced result does
/// not fit back into 64 bits. Link costs are parsed from decimal text (or
/// "p/q") so that comparisons and argmin tie-breaks never depend on floating
/// point rounding.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr Cost(std::int64_t integer) : num_(integer) {}  // NOLINT(implicit)

  static Cost fraction(std::int64_t num, std::int64_t den);

  /// Accepts "12", "0.125", "3/7". Rejects signs other than a leading '-',
  /// exponents and empty input.
  static Cost parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Terminating decimal when the denominator only has factors 2 and 5,
  /// otherwise "p/q". parse(to_string()) is the identity.
  std::string to_string() const;

  /// this / divisor as an exact rational; divisor > 0.
  Cost divided_by(std::uint64_t divisor) const;

  Cost& operator+=(const Cost& other);
  Cost& operator-=(const Cost& other);

  friend Cost operator+(Cost a, const Cost& b) { return a += b; }
  friend Cost operator-(Cost a, const Cost& b) { return a -= b; }
  friend Cost operator*(const Cost& a, std::int64_t factor);
  friend Cost operator/(const Cost& a, const Cost& b);

  friend bool operator==(const Cost& a, const Cost& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) noexcept;

 private:
  static Cost from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Cost& cost);

}  // namespace wcap
