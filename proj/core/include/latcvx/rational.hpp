#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace latcvx {

using Integer = mpz_class;

/**
 * Arbitrary-precision rational number, always stored in lowest terms with a
 * positive denominator. Every scalar in the library is one of these; nothing
 * is ever rounded.
 *
 * Text form is "p/q", or just "p" when q == 1.
 */
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
    requires(sizeof(T) <= sizeof(long))
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT: implicit by design of the number type

  template <std::unsigned_integral T>
    requires(sizeof(T) <= sizeof(unsigned long))
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT

  Rational(const Integer& v) : value_(v) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Parses "p", "p/q", "-p/q" (optional surrounding whitespace).
  /// Throws ParseError on anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] Integer numerator() const { return value_.get_num(); }
  [[nodiscard]] Integer denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& gmp() const { return value_; }

  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  /// Decimal rendering with `digits` places after the point, rounded half away from zero.
  [[nodiscard]] std::string decimal(int digits) const;

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Integer floor() const;
  [[nodiscard]] Integer ceil() const;
  [[nodiscard]] Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// this += a * b, without a temporary.
  void add_product(const Rational& a, const Rational& b);
  /// this -= a * b, without a temporary.
  void sub_product(const Rational& a, const Rational& b);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Greatest common divisor of two integers (non-negative result).
Integer gcd(const Integer& a, const Integer& b);
/// Least common multiple (non-negative result).
Integer lcm(const Integer& a, const Integer& b);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace latcvx

template <>
struct std::hash<latcvx::Rational> {
  std::size_t operator()(const latcvx::Rational& r) const noexcept;
};
