#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "tansec/algebra/exact_int.hpp"

namespace tansec {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Normalization happens on every construction.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const ExactInt& v) : value_(v.mpz()) {}             // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when the denominator is zero.
  Rational(const ExactInt& numerator, const ExactInt& denominator);
  explicit Rational(mpq_class v);

  /// Accepts "p", "p/q" and plain decimals such as "-0.125".
  static Rational from_string(std::string_view text);
  static Rational pow(const Rational& base, long exponent);

  [[nodiscard]] ExactInt numerator() const { return ExactInt(mpz_class(value_.get_num())); }
  [[nodiscard]] ExactInt denominator() const { return ExactInt(mpz_class(value_.get_den())); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  [[nodiscard]] const mpq_class& mpq() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

 private:
  mpq_class value_;
};

}  // namespace tansec
