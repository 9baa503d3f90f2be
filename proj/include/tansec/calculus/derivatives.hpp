#pragma once

#include <string_view>
#include <vector>

#include "tansec/algebra/big_float.hpp"
#include "tansec/algebra/int_polynomial.hpp"
#include "tansec/algebra/rational.hpp"
#include "tansec/polys/derivative_polynomials.hpp"

namespace tansec {

enum class DerivKind { Tan, Sec, Cot, Csc, Tanh, Sech, Coth, Csch };
enum class Prefactor { One, Sec, Csc, Sech, Csch };
/// The function whose value is substituted into the derivative polynomial.
enum class Substitution { Tan, Cot, Tanh, Coth };

inline constexpr DerivKind kAllDerivKinds[] = {DerivKind::Tan,  DerivKind::Sec,  DerivKind::Cot,  DerivKind::Csc,
                                               DerivKind::Tanh, DerivKind::Sech, DerivKind::Coth, DerivKind::Csch};

/// d^n/dx^n f(x) = (alternating ? (-1)^n : 1) * prefactor(x) * family_n(variable(x)).
struct KindRule {
  PolyFamily family;
  bool alternating;
  Prefactor prefactor;
  Substitution variable;
};

[[nodiscard]] constexpr KindRule rule_for(DerivKind kind) {
  switch (kind) {
    case DerivKind::Tan: return {PolyFamily::P, false, Prefactor::One, Substitution::Tan};
    case DerivKind::Sec: return {PolyFamily::Q, false, Prefactor::Sec, Substitution::Tan};
    case DerivKind::Cot: return {PolyFamily::P, true, Prefactor::One, Substitution::Cot};
    case DerivKind::Csc: return {PolyFamily::Q, true, Prefactor::Csc, Substitution::Cot};
    case DerivKind::Tanh: return {PolyFamily::HyperP, false, Prefactor::One, Substitution::Tanh};
    case DerivKind::Sech: return {PolyFamily::HyperQ, false, Prefactor::Sech, Substitution::Tanh};
    case DerivKind::Coth: return {PolyFamily::HyperP, false, Prefactor::One, Substitution::Coth};
    case DerivKind::Csch: return {PolyFamily::HyperQ, false, Prefactor::Csch, Substitution::Coth};
  }
  return {PolyFamily::P, false, Prefactor::One, Substitution::Tan};
}

std::string_view to_string(DerivKind kind);
/// "1", "sec", "csc", "sech", "csch".
std::string_view to_string(Prefactor prefactor);
/// Case-insensitive function name ("tan", "Csch", ...). Throws std::invalid_argument.
DerivKind parse_deriv_kind(std::string_view text);

/// coefficient * prefactor(x) is the exact n-th derivative.
struct ExactDerivative {
  Rational coefficient;
  Prefactor prefactor;

  friend bool operator==(const ExactDerivative&, const ExactDerivative&) = default;
};

/// The signed polynomial in the substitution variable u: the n-th derivative
/// equals prefactor(x) * result(u).
IntPolynomial derivative_u_polynomial(DerivKind kind, int n, DerivativePolynomials& memo = DerivativePolynomials::shared());

/// Exact n-th derivative given the exact value u of the substitution
/// variable (tan x, cot x, tanh x or coth x according to the kind).
ExactDerivative nth_derivative_exact(DerivKind kind, int n, const Rational& u,
                                     DerivativePolynomials& memo = DerivativePolynomials::shared());

/// f(x) itself for the given kind, at x's precision. No pole checks.
BigFloat evaluate_function(DerivKind kind, const BigFloat& x);

/// Numeric n-th derivative at x, computed at precision + 32 guard bits and
/// rounded to `precision`.
///
/// Throws PoleError when the relevant denominator (cos x, sin x or sinh x)
/// is below 2^(-precision/2) in magnitude, and DomainError when |x| > 2^20
/// or precision < 64.
BigFloat nth_derivative_numeric(DerivKind kind, int n, const BigFloat& x, Precision precision,
                                DerivativePolynomials& memo = DerivativePolynomials::shared());

/// Largest |x| accepted by the numeric evaluators.
inline constexpr long kMaxArgumentLog2 = 20;

/// Checks the argument cap and the pole tolerance for `kind` at x.
void check_numeric_argument(DerivKind kind, const BigFloat& x, Precision precision);

/// Derivatives 0..n_max at x from the Maclaurin series in t of f(x+t),
/// built with the addition formula and float series division. Shares no code
/// with the derivative polynomials.
std::vector<BigFloat> taylor_addition_oracle(DerivKind kind, const BigFloat& x, int n_max, Precision precision);

/// The Stirling-subset closed form for the n-th derivative of cot, evaluated
/// at u = cot x in exact Gaussian-rational arithmetic:
///   (2i)^n (u - i) sum_{k=1}^n (k!/2^k) {n,k} (i u - 1)^k.
/// Throws DomainError for n < 1 and NonRealResult if the imaginary part is nonzero.
Rational adamchik_cot_closed_form(int n, const Rational& u);

}  // namespace tansec
