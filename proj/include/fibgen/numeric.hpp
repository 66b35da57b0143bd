#pragma once

// Exact integer and rational arithmetic for the bound computations. Every
// theorem-side value is an integer or a half-integer, so nothing in this
// header touches floating point; the square-root closed forms live in
// bounds.cpp and are tolerance-tested there.

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fibgen {

/// ceil(a/b) for a >= 0, b >= 1.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::domain_error("ceil_div: division by zero");
  if (b < 0) throw std::domain_error("ceil_div: divisor must be positive");
  if (a < 0) throw std::domain_error("ceil_div: dividend must be non-negative");
  return (a + b - 1) / b;
}

/// floor(sqrt(a)); the result r satisfies r^2 <= a < (r+1)^2.
inline std::int64_t isqrt(std::int64_t a) {
  if (a < 0) throw std::domain_error("isqrt: negative input");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(a)));
  while (r > 0 && static_cast<__int128>(r) * r > a) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= a) ++r;
  return r;
}

// Exact rational number. Always stored reduced, denominator always positive,
// zero as 0/1. Comparisons and arithmetic are exact; intermediates run in
// 128 bits so reduced values that fit in 64 bits never overflow en route.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(std::int64_t n) : num_(n) {}  // implicit: integers are rationals
  Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "num/den", or plain "num" when the value is an integer.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ +
                    static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.num_) * b.num_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
    constexpr auto kMax = static_cast<__int128>(INT64_MAX);
    if (n > kMax || -n > kMax || d > kMax)
      throw std::overflow_error("Rat: value does not fit in 64 bits");
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;  // > 0, coprime to num_
};

/// Smallest integer >= x.
inline std::int64_t rat_ceil(const Rat& x) {
  const std::int64_t n = x.num(), d = x.den();
  return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace fibgen
