#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "tansec/algebra/big_float.hpp"
#include "tansec/algebra/exact_int.hpp"
#include "tansec/algebra/rational.hpp"

namespace tansec {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// coefficients()[k] is the coefficient of x^k. Trailing zeros are stripped
/// on construction, so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ExactInt> coefficients);
  IntPolynomial(std::initializer_list<ExactInt> coefficients);

  static IntPolynomial monomial(ExactInt coefficient, std::size_t exponent);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::span<const ExactInt> coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  [[nodiscard]] const ExactInt& coefficient(std::size_t k) const;
  [[nodiscard]] const ExactInt& leading_coefficient() const { return coefficient(coeffs_.empty() ? 0 : coeffs_.size() - 1); }

  /// p(-x)
  [[nodiscard]] IntPolynomial reflected() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const ExactInt& c, const IntPolynomial& p);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

 private:
  void normalize();

  std::vector<ExactInt> coeffs_;
};

/// Formal derivative.
IntPolynomial derivative(const IntPolynomial& p);

/// Exact value of p at a rational point (Horner).
Rational eval_exact(const IntPolynomial& p, const Rational& x);

/// Horner evaluation carried at precision + guard bits, rounded to `precision`.
/// Throws DomainError when precision is below 64 bits.
BigFloat eval_float(const IntPolynomial& p, const BigFloat& x, Precision precision);

}  // namespace tansec
