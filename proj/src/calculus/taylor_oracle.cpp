#include <string>
#include <vector>

#include "tansec/calculus/derivatives.hpp"
#include "tansec/errors.hpp"

namespace tansec {

namespace {

using FloatSeries = std::vector<BigFloat>;

// The oracle carries more guard bits than the evaluator it checks.
constexpr long kOracleGuardBits = 64;

FloatSeries zeros(int n_max, Precision p) { return FloatSeries(static_cast<std::size_t>(n_max) + 1, BigFloat(p)); }

// sin/cos (alternate = true) or sinh/cosh (alternate = false) with the given parity.
FloatSeries factorial_series(int n_max, int parity, bool alternate, Precision p) {
  FloatSeries s = zeros(n_max, p);
  BigFloat inverse_factorial(1, p);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) inverse_factorial /= BigFloat(static_cast<long>(n), p);
    if (n % 2 != parity) continue;
    const bool negative = alternate && (n / 2) % 2 == 1;
    s[static_cast<std::size_t>(n)] = negative ? -inverse_factorial : inverse_factorial;
  }
  return s;
}

FloatSeries divide(const FloatSeries& a, const FloatSeries& b, Precision p) {
  const int n_max = static_cast<int>(a.size()) - 1;
  if (abs(b[0]) < BigFloat::pow2(-p.bits / 2, p)) {
    throw DivergenceError("series division denominator vanishes at t = 0");
  }
  FloatSeries q = zeros(n_max, p);
  for (int n = 0; n <= n_max; ++n) {
    BigFloat acc = a[static_cast<std::size_t>(n)];
    for (int j = 1; j <= n; ++j) acc -= b[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(n - j)];
    q[static_cast<std::size_t>(n)] = acc / b[0];
    if (!q[static_cast<std::size_t>(n)].is_finite()) {
      throw DivergenceError("series coefficient " + std::to_string(n) + " is not finite");
    }
  }
  return q;
}

// c0 + c1 * s, termwise.
FloatSeries affine(const BigFloat& c0, const BigFloat& c1, const FloatSeries& s) {
  FloatSeries out = s;
  for (auto& v : out) v = c1 * v;
  out[0] += c0;
  return out;
}

FloatSeries scaled(const BigFloat& c, FloatSeries s) {
  for (auto& v : s) v = c * v;
  return s;
}

}  // namespace

std::vector<BigFloat> taylor_addition_oracle(DerivKind kind, const BigFloat& x, int n_max, Precision precision) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  check_numeric_argument(kind, x, precision);
  const Precision work = precision.with_guard(kOracleGuardBits);
  const BigFloat xw = x.rounded(std::max(work, x.precision()));
  const BigFloat one(1, work);

  const bool hyperbolic =
      kind == DerivKind::Tanh || kind == DerivKind::Sech || kind == DerivKind::Coth || kind == DerivKind::Csch;
  // tan t & sec t, or tanh t & sech t.
  const FloatSeries odd = factorial_series(n_max, 1, !hyperbolic, work);
  const FloatSeries even = factorial_series(n_max, 0, !hyperbolic, work);
  FloatSeries unit_one = zeros(n_max, work);
  unit_one[0] = one;
  const FloatSeries t_ratio = divide(odd, even, work);
  const FloatSeries t_recip = divide(unit_one, even, work);

  FloatSeries shifted;
  switch (kind) {
    case DerivKind::Tan: {  // (u + tan t) / (1 - u tan t)
      const BigFloat u = tan(xw);
      shifted = divide(affine(u, one, t_ratio), affine(one, -u, t_ratio), work);
      break;
    }
    case DerivKind::Cot: {  // (v - tan t) / (1 + v tan t)
      const BigFloat v = cot(xw);
      shifted = divide(affine(v, -one, t_ratio), affine(one, v, t_ratio), work);
      break;
    }
    case DerivKind::Sec: {  // sec x sec t / (1 - u tan t)
      shifted = scaled(sec(xw), divide(t_recip, affine(one, -tan(xw), t_ratio), work));
      break;
    }
    case DerivKind::Csc: {  // csc x sec t / (1 + v tan t)
      shifted = scaled(csc(xw), divide(t_recip, affine(one, cot(xw), t_ratio), work));
      break;
    }
    case DerivKind::Tanh: {  // (u + tanh t) / (1 + u tanh t)
      const BigFloat u = tanh(xw);
      shifted = divide(affine(u, one, t_ratio), affine(one, u, t_ratio), work);
      break;
    }
    case DerivKind::Coth: {  // (v + tanh t) / (1 + v tanh t)
      const BigFloat v = coth(xw);
      shifted = divide(affine(v, one, t_ratio), affine(one, v, t_ratio), work);
      break;
    }
    case DerivKind::Sech: {  // sech x sech t / (1 + u tanh t)
      shifted = scaled(sech(xw), divide(t_recip, affine(one, tanh(xw), t_ratio), work));
      break;
    }
    case DerivKind::Csch: {  // csch x sech t / (1 + v tanh t)
      shifted = scaled(csch(xw), divide(t_recip, affine(one, coth(xw), t_ratio), work));
      break;
    }
  }

  std::vector<BigFloat> derivatives;
  derivatives.reserve(shifted.size());
  BigFloat factorial(1, work);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) factorial *= BigFloat(static_cast<long>(n), work);
    derivatives.push_back((shifted[static_cast<std::size_t>(n)] * factorial).rounded(precision));
  }
  return derivatives;
}

}  // namespace tansec
