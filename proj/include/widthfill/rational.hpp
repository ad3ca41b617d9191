#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "error.hpp"

namespace widthfill {

/// Exact fraction with a positive denominator, always in lowest terms.
class rational {
 public:
  constexpr rational() = default;
  constexpr rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  rational(long long num, long long den) {
    if (den == 0) throw argument_error("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  [[nodiscard]] constexpr long long num() const noexcept { return num_; }
  [[nodiscard]] constexpr long long den() const noexcept { return den_; }

  friend bool operator==(const rational&, const rational&) = default;
  friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  /// "p/q", or just "p" for integers.
  [[nodiscard]] std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Decimal rendering truncated towards zero with `digits` fractional digits.
  [[nodiscard]] std::string decimal(int digits = 4) const {
    std::string out = num_ < 0 ? "-" : "";
    const long long a = num_ < 0 ? -num_ : num_;
    out += std::to_string(a / den_);
    if (digits <= 0) return out;
    out += '.';
    long long rem = a % den_;
    for (int d = 0; d < digits; ++d) {
      rem *= 10;
      out += static_cast<char>('0' + rem / den_);
      rem %= den_;
    }
    return out;
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace widthfill
