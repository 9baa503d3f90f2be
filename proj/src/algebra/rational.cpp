#include "tansec/algebra/rational.hpp"

#include <stdexcept>
#include <string>

namespace tansec {

Rational::Rational(const ExactInt& numerator, const ExactInt& denominator) {
  if (denominator.is_zero()) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator.mpz(), denominator.mpz());
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    return Rational(ExactInt::from_string(text.substr(0, slash)), ExactInt::from_string(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(ExactInt::from_string(text));

  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  bool negative = !whole.empty() && whole.front() == '-';
  if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
  if (whole.empty() && frac.empty()) throw std::invalid_argument("invalid decimal literal: " + std::string(text));
  for (char c : frac) {
    if (c < '0' || c > '9') throw std::invalid_argument("invalid decimal literal: " + std::string(text));
  }
  std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(frac);
  ExactInt num = ExactInt::from_string(digits);
  if (negative) num = -num;
  return Rational(num, ExactInt::pow(ExactInt(10), frac.size()));
}

Rational Rational::pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  auto e = static_cast<unsigned long>(exponent);
  return Rational(ExactInt::pow(base.numerator(), e), ExactInt::pow(base.denominator(), e));
}

}  // namespace tansec
