#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace tansec {

/// Arbitrary-precision signed integer backed by GMP.
///
/// Value type: copies are deep, moves are cheap. Zero is always canonical
/// (GMP never stores a negative zero).
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit ExactInt(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal integer. Throws std::invalid_argument.
  static ExactInt from_string(std::string_view text);
  static ExactInt factorial(unsigned long n);
  static ExactInt pow(const ExactInt& base, unsigned long exponent);

  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  [[nodiscard]] ExactInt abs() const { return ExactInt(mpz_class(::abs(value_))); }
  [[nodiscard]] bool fits_int64() const { return value_.fits_slong_p(); }
  [[nodiscard]] std::int64_t to_int64() const;
  [[nodiscard]] std::size_t bit_length() const { return mpz_sizeinbase(value_.get_mpz_t(), 2); }
  [[nodiscard]] bool is_divisible_by(const ExactInt& d) const;

  [[nodiscard]] const mpz_class& mpz() const { return value_; }

  ExactInt& operator+=(const ExactInt& o) { value_ += o.value_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { value_ -= o.value_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { value_ *= o.value_; return *this; }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
  friend ExactInt operator-(const ExactInt& a) { return ExactInt(mpz_class(-a.value_)); }
  /// Truncating division (rounds toward zero); divisor must be nonzero.
  friend ExactInt operator/(const ExactInt& a, const ExactInt& b);
  friend ExactInt operator%(const ExactInt& a, const ExactInt& b);

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

 private:
  mpz_class value_;
};

ExactInt gcd(const ExactInt& a, const ExactInt& b);

}  // namespace tansec
