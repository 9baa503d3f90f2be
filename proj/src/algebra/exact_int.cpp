#include "tansec/algebra/exact_int.hpp"

#include <stdexcept>

namespace tansec {

ExactInt ExactInt::from_string(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("invalid integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return ExactInt(mpz_class(s, 10));
}

ExactInt ExactInt::factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::pow(const ExactInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return ExactInt(std::move(r));
}

std::int64_t ExactInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits");
  return value_.get_si();
}

bool ExactInt::is_divisible_by(const ExactInt& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(value_.get_mpz_t(), d.value_.get_mpz_t()) != 0;
}

ExactInt operator/(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt operator%(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(r));
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return ExactInt(std::move(g));
}

}  // namespace tansec
