#pragma once

#include <compare>
#include <optional>
#include <string>

#include "casson/checked.hpp"

namespace casson {

/// Exact element of (1/4)Z, stored as four times the value.
///
/// Every invariant computed here is a sum of character weights 1, 1/2, 1/4,
/// so denominators never exceed 4 and a single scaled integer represents
/// the value exactly. All arithmetic is overflow-checked.
class QuarterRational {
 public:
  constexpr QuarterRational() = default;

  static QuarterRational from_quarters(int64 n4) { return QuarterRational(n4); }
  static QuarterRational from_integer(int64 n) {
    return QuarterRational(checked_mul(n, 4));
  }

  int64 quarters() const { return num4_; }

  bool is_integer() const { return num4_ % 4 == 0; }
  int64 to_integer() const {
    if (!is_integer())
      throw std::domain_error("QuarterRational: " + str() + " is not an integer");
    return num4_ / 4;
  }

  QuarterRational operator+(QuarterRational o) const {
    return QuarterRational(checked_add(num4_, o.num4_));
  }
  QuarterRational operator-(QuarterRational o) const {
    return QuarterRational(checked_sub(num4_, o.num4_));
  }
  QuarterRational operator-() const { return QuarterRational(checked_neg(num4_)); }
  QuarterRational operator*(int64 k) const {
    return QuarterRational(checked_mul(num4_, k));
  }
  QuarterRational& operator+=(QuarterRational o) { return *this = *this + o; }
  QuarterRational& operator-=(QuarterRational o) { return *this = *this - o; }

  /// Exact division, or nullopt when the quotient leaves (1/4)Z.
  std::optional<QuarterRational> divide_exact(int64 d) const {
    if (d == 0) throw std::domain_error("QuarterRational: division by zero");
    if (num4_ % d != 0) return std::nullopt;
    return QuarterRational(num4_ / d);
  }

  auto operator<=>(const QuarterRational&) const = default;

  /// Reduced-fraction rendering: "30" for 120/4, "15/2", "101/4", "-3/4".
  std::string str() const {
    int64 num = num4_;
    int64 den = 4;
    while (den > 1 && num % 2 == 0) {
      num /= 2;
      den /= 2;
    }
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  explicit constexpr QuarterRational(int64 n4) : num4_(n4) {}
  int64 num4_ = 0;
};

inline QuarterRational operator*(int64 k, QuarterRational q) { return q * k; }

}  // namespace casson
