#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "powergraph/errors.hpp"

namespace powergraph {

// Exact rational number kept in lowest terms with a positive denominator.
// Intermediates are widened to __int128 so that window-scale arithmetic
// cannot overflow; there is no floating point anywhere.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}

  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw PreconditionFailed("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator-(const Rational& q) { return Rational(-q.num_, q.den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw PreconditionFailed("division of rationals by zero");
    return from_wide((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // n with b = n*a, when a divides b in the additive sense.
  static std::optional<std::int64_t> integer_ratio(const Rational& b, const Rational& a) {
    if (a.is_zero()) return std::nullopt;
    Rational q = b / a;
    if (!q.is_integer()) return std::nullopt;
    return q.num();
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd_wide(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw PreconditionFailed("rational arithmetic overflow");
    Rational q;
    q.num_ = (std::int64_t)n;
    q.den_ = (std::int64_t)d;
    return q;
  }

  static __int128 gcd_wide(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primes p <= bound, ascending.
inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// Exponent of p in n (n != 0).
inline int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw PreconditionFailed("valuation of zero");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Distinct prime factors of |n|, ascending (n != 0).
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n == 0) throw PreconditionFailed("factoring zero");
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace powergraph
