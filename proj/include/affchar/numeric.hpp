#pragma once

// Exact scalar types shared by every module.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace affchar {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over int64 with a positive, reduced denominator.
/// Intermediate products are formed in 128 bits; a result that does not fit
/// back into 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    return *this = make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    return *this = make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    return *this = make(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = make(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Raised for inputs that violate an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed a configured resource cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);
bool is_integer(const Rational& r);

/// "p/r" with r >= 1; integers keep the "/1".
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);

}  // namespace affchar
