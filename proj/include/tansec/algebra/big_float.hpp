#pragma once

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "tansec/algebra/exact_int.hpp"
#include "tansec/algebra/rational.hpp"

namespace tansec {

/// Working precision in bits.
struct Precision {
  long bits = 256;

  static constexpr long kMinimumBits = 64;
  /// Extra bits carried by evaluators before rounding back to the caller's precision.
  static constexpr long kGuardBits = 32;

  [[nodiscard]] constexpr Precision with_guard(long extra = kGuardBits) const { return Precision{bits + extra}; }
  friend constexpr bool operator==(Precision, Precision) = default;
  friend constexpr auto operator<=>(Precision, Precision) = default;
};

/// Throws DomainError when the precision is below the 64-bit floor.
void require_precision(Precision p);

/// Arbitrary-precision binary float (MPFR-backed), round-to-nearest.
///
/// Every value carries the precision it was computed at. Binary operations
/// produce a result at the larger of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(Precision p = Precision{});
  BigFloat(long value, Precision p);
  BigFloat(const ExactInt& value, Precision p);
  BigFloat(const Rational& value, Precision p);
  ~BigFloat();

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;

  /// Decimal or scientific literal ("0.5", "-1.25e-3"). Throws std::invalid_argument.
  static BigFloat from_string(std::string_view text, Precision p);
  static BigFloat pi(Precision p);
  /// 2^exponent, exact.
  static BigFloat pow2(long exponent, Precision p);

  [[nodiscard]] Precision precision() const { return Precision{static_cast<long>(mpfr_get_prec(value_))}; }
  [[nodiscard]] BigFloat rounded(Precision p) const;

  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with 0.5 <= |x|/2^e < 1; meaningless for zero.
  [[nodiscard]] long exponent() const { return static_cast<long>(mpfr_get_exp(value_)); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant decimal digits.
  [[nodiscard]] std::string to_string(int digits = 20) const;

  [[nodiscard]] mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& v) { return os << v.to_string(); }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat pow(const BigFloat& x, long exponent);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat tan(const BigFloat& x);
BigFloat cot(const BigFloat& x);
BigFloat sec(const BigFloat& x);
BigFloat csc(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat coth(const BigFloat& x);
BigFloat sech(const BigFloat& x);
BigFloat csch(const BigFloat& x);

}  // namespace tansec
