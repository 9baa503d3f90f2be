#include "tansec/algebra/int_polynomial.hpp"

#include <algorithm>

namespace tansec {

namespace {
const ExactInt kZero{};
}

IntPolynomial::IntPolynomial(std::vector<ExactInt> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<ExactInt> coefficients) : coeffs_(coefficients) { normalize(); }

IntPolynomial IntPolynomial::monomial(ExactInt coefficient, std::size_t exponent) {
  std::vector<ExactInt> c(exponent + 1);
  c[exponent] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const ExactInt& IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

IntPolynomial IntPolynomial::reflected() const {
  IntPolynomial r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial operator-(const IntPolynomial& a) {
  IntPolynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const ExactInt& c, const IntPolynomial& p) {
  IntPolynomial r = p;
  for (auto& x : r.coeffs_) x *= c;
  r.normalize();
  return r;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = p.coeffs_.size(); k-- > 0;) {
    const ExactInt& c = p.coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    ExactInt mag = c.abs();
    if (k == 0 || mag != ExactInt(1)) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os;
}

IntPolynomial derivative(const IntPolynomial& p) {
  auto c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<ExactInt> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = ExactInt(static_cast<std::int64_t>(k)) * c[k];
  return IntPolynomial(std::move(d));
}

Rational eval_exact(const IntPolynomial& p, const Rational& x) {
  Rational acc;
  auto c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + Rational(c[k]);
  return acc;
}

BigFloat eval_float(const IntPolynomial& p, const BigFloat& x, Precision precision) {
  require_precision(precision);
  const Precision work = precision.with_guard();
  const BigFloat xw = x.rounded(std::max(work, x.precision()));
  BigFloat acc(work);
  auto c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    mpfr_mul(acc.get(), acc.get(), xw.get(), MPFR_RNDN);
    mpfr_add_z(acc.get(), acc.get(), c[k].mpz().get_mpz_t(), MPFR_RNDN);
  }
  return acc.rounded(precision);
}

}  // namespace tansec
