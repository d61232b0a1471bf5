#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace powerindex {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Text form is "p/q", or just "p" when q == 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: implicit on purpose, 3 == Rational(3)
  Rational(const BigInt& value);  // NOLINT
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Throws InvalidInput on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  std::string to_string() const;

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  BigInt floor() const;
  BigInt ceil() const;

  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::size_t hash_value(const Rational& r);

BigInt factorial(unsigned long n);
/// Binomial coefficient, zero when k < 0 or k > n.
BigInt binomial(long n, long k);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace powerindex

template <>
struct std::hash<powerindex::Rational> {
  std::size_t operator()(const powerindex::Rational& r) const noexcept {
    return powerindex::hash_value(r);
  }
};
