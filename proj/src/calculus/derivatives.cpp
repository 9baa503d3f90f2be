#include "tansec/calculus/derivatives.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "tansec/algebra/gaussian.hpp"
#include "tansec/errors.hpp"

namespace tansec {

namespace {

void require_order(int n) {
  if (n < 0) throw DomainError("derivative order must be nonnegative, got " + std::to_string(n));
}

BigFloat substitution_value(Substitution variable, const BigFloat& x) {
  switch (variable) {
    case Substitution::Tan: return tan(x);
    case Substitution::Cot: return cot(x);
    case Substitution::Tanh: return tanh(x);
    case Substitution::Coth: return coth(x);
  }
  throw std::logic_error("unhandled substitution");
}

BigFloat prefactor_value(Prefactor prefactor, const BigFloat& x) {
  switch (prefactor) {
    case Prefactor::One: return BigFloat(1, x.precision());
    case Prefactor::Sec: return sec(x);
    case Prefactor::Csc: return csc(x);
    case Prefactor::Sech: return sech(x);
    case Prefactor::Csch: return csch(x);
  }
  throw std::logic_error("unhandled prefactor");
}

}  // namespace

std::string_view to_string(DerivKind kind) {
  switch (kind) {
    case DerivKind::Tan: return "tan";
    case DerivKind::Sec: return "sec";
    case DerivKind::Cot: return "cot";
    case DerivKind::Csc: return "csc";
    case DerivKind::Tanh: return "tanh";
    case DerivKind::Sech: return "sech";
    case DerivKind::Coth: return "coth";
    case DerivKind::Csch: return "csch";
  }
  return "unknown";
}

std::string_view to_string(Prefactor prefactor) {
  switch (prefactor) {
    case Prefactor::One: return "1";
    case Prefactor::Sec: return "sec";
    case Prefactor::Csc: return "csc";
    case Prefactor::Sech: return "sech";
    case Prefactor::Csch: return "csch";
  }
  return "unknown";
}

DerivKind parse_deriv_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (DerivKind kind : kAllDerivKinds) {
    if (to_string(kind) == lower) return kind;
  }
  throw std::invalid_argument("unknown function kind: " + std::string(text));
}

IntPolynomial derivative_u_polynomial(DerivKind kind, int n, DerivativePolynomials& memo) {
  require_order(n);
  const KindRule rule = rule_for(kind);
  const IntPolynomial& p = memo.get(rule.family, n);
  return (rule.alternating && n % 2 == 1) ? -p : p;
}

ExactDerivative nth_derivative_exact(DerivKind kind, int n, const Rational& u, DerivativePolynomials& memo) {
  require_order(n);
  const KindRule rule = rule_for(kind);
  Rational value = eval_exact(memo.get(rule.family, n), u);
  if (rule.alternating && n % 2 == 1) value = -value;
  return {std::move(value), rule.prefactor};
}

BigFloat evaluate_function(DerivKind kind, const BigFloat& x) {
  switch (kind) {
    case DerivKind::Tan: return tan(x);
    case DerivKind::Sec: return sec(x);
    case DerivKind::Cot: return cot(x);
    case DerivKind::Csc: return csc(x);
    case DerivKind::Tanh: return tanh(x);
    case DerivKind::Sech: return sech(x);
    case DerivKind::Coth: return coth(x);
    case DerivKind::Csch: return csch(x);
  }
  throw std::logic_error("unhandled kind");
}

void check_numeric_argument(DerivKind kind, const BigFloat& x, Precision precision) {
  require_precision(precision);
  if (!x.is_finite()) throw DomainError("evaluation point is not finite");
  if (!x.is_zero() && x.exponent() > kMaxArgumentLog2) {
    throw DomainError("|x| exceeds 2^" + std::to_string(kMaxArgumentLog2));
  }
  const BigFloat xw = x.rounded(std::max(precision.with_guard(), x.precision()));
  BigFloat denominator(precision);
  switch (kind) {
    case DerivKind::Tan:
    case DerivKind::Sec: denominator = cos(xw); break;
    case DerivKind::Cot:
    case DerivKind::Csc: denominator = sin(xw); break;
    case DerivKind::Coth:
    case DerivKind::Csch: denominator = sinh(xw); break;
    case DerivKind::Tanh:
    case DerivKind::Sech: return;
  }
  if (abs(denominator) < BigFloat::pow2(-precision.bits / 2, precision)) {
    throw PoleError(std::string(to_string(kind)) + " has a pole at x = " + x.to_string(30));
  }
}

BigFloat nth_derivative_numeric(DerivKind kind, int n, const BigFloat& x, Precision precision,
                                DerivativePolynomials& memo) {
  require_order(n);
  check_numeric_argument(kind, x, precision);
  const Precision work = precision.with_guard();
  const BigFloat xw = x.rounded(std::max(work, x.precision()));
  const KindRule rule = rule_for(kind);

  const BigFloat u = substitution_value(rule.variable, xw).rounded(work);
  BigFloat value = eval_float(memo.get(rule.family, n), u, work);
  if (rule.alternating && n % 2 == 1) value = -value;
  if (rule.prefactor != Prefactor::One) value *= prefactor_value(rule.prefactor, xw).rounded(work);
  return value.rounded(precision);
}

Rational adamchik_cot_closed_form(int n, const Rational& u) {
  if (n < 1) throw DomainError("the Stirling-subset cot formula needs n >= 1");
  const NumberTriangle stirling = build_stirling_subset_triangle(n);
  const GaussianRational base{Rational(-1), u};  // i u - 1
  GaussianRational power{Rational(1), Rational(0)};
  GaussianRational sum;
  ExactInt factorial(1);
  ExactInt two_power(1);
  for (int k = 1; k <= n; ++k) {
    factorial *= ExactInt(k);
    two_power *= ExactInt(2);
    power *= base;
    const Rational weight = Rational(factorial * stirling.at(n, k), two_power);
    sum += GaussianRational{weight, Rational(0)} * power;
  }
  const GaussianRational prefix =
      pow(GaussianRational{Rational(0), Rational(2)}, static_cast<unsigned long>(n)) * GaussianRational{u, Rational(-1)};
  const GaussianRational result = prefix * sum;
  if (!result.is_real()) {
    throw NonRealResult("cot closed form produced imaginary part " + result.im.to_string() + " at n = " +
                        std::to_string(n));
  }
  return result.re;
}

}  // namespace tansec
