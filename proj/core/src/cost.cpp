#include "wcap/cost.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>

#include "wcap/error.hpp"

namespace wcap {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.front() == '-') {
    throw Error(Errc::MalformedInput, "bad number '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(Errc::MalformedInput, "bad number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Cost Cost::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw Error(Errc::InvalidParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw Error(Errc::Overflow, "rational out of 64-bit range");
  Cost c;
  c.num_ = static_cast<std::int64_t>(num);
  c.den_ = num == 0 ? 1 : static_cast<std::int64_t>(den);
  return c;
}

Cost Cost::fraction(std::int64_t num, std::int64_t den) { return from_wide(num, den); }

Cost Cost::parse(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  Cost result;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_digits(text.substr(0, slash), whole);
    const auto den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw Error(Errc::MalformedInput, "zero denominator in '" + std::string(whole) + "'");
    result = from_wide(num, den);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(Errc::MalformedInput, "bad number '" + std::string(whole) + "'");
    }
    if (frac_part.size() > 18) throw Error(Errc::Overflow, "too many decimals in '" + std::string(whole) + "'");
    __int128 scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const __int128 ip = int_part.empty() ? 0 : parse_digits(int_part, whole);
    const __int128 fp = frac_part.empty() ? 0 : parse_digits(frac_part, whole);
    result = from_wide(ip * scale + fp, scale);
  } else {
    result = Cost(parse_digits(text, whole));
  }
  if (negative) result.num_ = -result.num_;
  return result;
}

std::string Cost::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

  // num/den = num * 2^(e-twos) * 5^(e-fives) / 10^e
  const int digits = std::max(twos, fives);
  __int128 scaled = num_;
  for (int i = twos; i < digits; ++i) scaled *= 2;
  for (int i = fives; i < digits; ++i) scaled *= 5;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  __int128 pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  const auto int_part = static_cast<std::uint64_t>(scaled / pow10);
  auto frac = static_cast<std::uint64_t>(scaled % pow10);
  std::string frac_digits(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i) {
    frac_digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  return (negative ? "-" : "") + std::to_string(int_part) + "." + frac_digits;
}

Cost Cost::divided_by(std::uint64_t divisor) const {
  if (divisor == 0) throw Error(Errc::InvalidParams, "division by zero");
  return from_wide(num_, static_cast<__int128>(den_) * static_cast<__int128>(divisor));
}

Cost& Cost::operator+=(const Cost& other) {
  if (den_ == other.den_) {
    *this = from_wide(static_cast<__int128>(num_) + other.num_, den_);
  } else {
    *this = from_wide(static_cast<__int128>(num_) * other.den_ + static_cast<__int128>(other.num_) * den_,
                      static_cast<__int128>(den_) * other.den_);
  }
  return *this;
}

Cost& Cost::operator-=(const Cost& other) {
  Cost negated = other;
  negated.num_ = -negated.num_;
  return *this += negated;
}

Cost operator*(const Cost& a, std::int64_t factor) {
  return Cost::from_wide(static_cast<__int128>(a.num_) * factor, a.den_);
}

Cost operator/(const Cost& a, const Cost& b) {
  if (b.num_ == 0) throw Error(Errc::InvalidParams, "division by zero cost");
  return Cost::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) noexcept {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Cost& cost) { return os << cost.to_string(); }

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedInput: return "malformed input";
    case Errc::NotACactus: return "not a cactus";
    case Errc::Disconnected: return "disconnected";
    case Errc::UnknownVertex: return "unknown vertex";
    case Errc::Infeasible: return "infeasible";
    case Errc::InfeasibleRow: return "infeasible row";
    case Errc::InvalidParams: return "invalid parameters";
    case Errc::TooLarge: return "too large";
    case Errc::NonPositive: return "non-positive value";
    case Errc::EmptyInput: return "empty input";
    case Errc::Unsupported: return "unsupported";
    case Errc::Overflow: return "overflow";
  }
  return "unknown error";
}

}  // namespace wcap
