#include "tansec/algebra/big_float.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tansec/errors.hpp"

namespace tansec {

void require_precision(Precision p) {
  if (p.bits < Precision::kMinimumBits) {
    throw DomainError("precision must be at least 64 bits, got " + std::to_string(p.bits));
  }
}

namespace {

mpfr_prec_t larger(const BigFloat& a, const BigFloat& b) {
  return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

template <typename Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat::BigFloat(Precision p) {
  require_precision(p);
  mpfr_init2(value_, p.bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision p) : BigFloat(p) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(const ExactInt& value, Precision p) : BigFloat(p) {
  mpfr_set_z(value_, value.mpz().get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, Precision p) : BigFloat(p) {
  mpfr_set_q(value_, value.mpq().get_mpq_t(), MPFR_RNDN);
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(value_, o.value_);
  return *this;
}

BigFloat BigFloat::from_string(std::string_view text, Precision p) {
  BigFloat r(p);
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty floating-point literal");
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end != s.c_str() + s.size()) throw std::invalid_argument("invalid floating-point literal: " + s);
  return r;
}

BigFloat BigFloat::pi(Precision p) {
  BigFloat r(p);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long exponent, Precision p) {
  BigFloat r(1, p);
  mpfr_mul_2si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::rounded(Precision p) const {
  BigFloat r(p);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", std::max(digits, 1), value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(Precision{larger(a, b)});
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(Precision{larger(a, b)});
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(Precision{larger(a, b)});
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(Precision{larger(a, b)});
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) { return unary(a, mpfr_neg); }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  return mpfr_cmp(a.value_, b.value_) <=> 0;
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat tan(const BigFloat& x) { return unary(x, mpfr_tan); }
BigFloat cot(const BigFloat& x) { return unary(x, mpfr_cot); }
BigFloat sec(const BigFloat& x) { return unary(x, mpfr_sec); }
BigFloat csc(const BigFloat& x) { return unary(x, mpfr_csc); }
BigFloat sinh(const BigFloat& x) { return unary(x, mpfr_sinh); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }
BigFloat tanh(const BigFloat& x) { return unary(x, mpfr_tanh); }
BigFloat coth(const BigFloat& x) { return unary(x, mpfr_coth); }
BigFloat sech(const BigFloat& x) { return unary(x, mpfr_sech); }
BigFloat csch(const BigFloat& x) { return unary(x, mpfr_csch); }

BigFloat pow(const BigFloat& x, long exponent) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), exponent, MPFR_RNDN);
  return r;
}

}  // namespace tansec
