#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Overflow-checked 64-bit integer arithmetic. Every invariant in this
// library is an exact integer or quarter-integer; a silent wraparound
// would corrupt values undetectably, so overflow is a hard error.

namespace casson {

using int64 = std::int64_t;

class overflow_error : public std::runtime_error {
 public:
  explicit overflow_error(const std::string& what)
      : std::runtime_error("integer overflow: " + what) {}
};

inline int64 checked_add(int64 a, int64 b) {
  int64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw overflow_error(std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline int64 checked_sub(int64 a, int64 b) {
  int64 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw overflow_error(std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline int64 checked_mul(int64 a, int64 b) {
  int64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw overflow_error(std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline int64 checked_neg(int64 a) { return checked_sub(0, a); }

inline int64 checked_abs(int64 a) { return a < 0 ? checked_neg(a) : a; }

/// Greatest integer function applied to n/2.
inline int64 floor_half(int64 n) {
  if (n < 0)
    throw std::domain_error("floor_half: negative input " + std::to_string(n));
  return n / 2;
}

/// Split n >= 1 as 2^valuation * odd_part.
struct TwoAdicSplit {
  int64 valuation;
  int64 odd_part;
};

inline TwoAdicSplit two_adic_split(int64 n) {
  if (n <= 0)
    throw std::domain_error("two_adic_split: input must be positive, got " +
                            std::to_string(n));
  TwoAdicSplit s{0, n};
  while (s.odd_part % 2 == 0) {
    s.odd_part /= 2;
    ++s.valuation;
  }
  return s;
}

inline int64 gcd2(int64 a, int64 b) { return std::gcd(a, b); }

/// gcd of the absolute values of a nonempty list with at least one nonzero entry.
inline int64 gcd_all(std::span<const int64> values) {
  if (values.empty())
    throw std::domain_error("gcd_all: empty input");
  int64 g = 0;
  for (int64 v : values) g = std::gcd(g, checked_abs(v));
  if (g == 0)
    throw std::domain_error("gcd_all: all entries are zero");
  return g;
}

inline int64 gcd_all(std::initializer_list<int64> values) {
  return gcd_all(std::span<const int64>(values.begin(), values.size()));
}

inline int64 checked_lcm(int64 a, int64 b) {
  a = checked_abs(a);
  b = checked_abs(b);
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace casson
