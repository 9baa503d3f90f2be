#pragma once

#include "tansec/algebra/big_float.hpp"
#include "tansec/algebra/rational.hpp"

namespace tansec {

/// Exact Bernoulli number B_m (B_1 = -1/2). Values are cached process-wide.
Rational bernoulli(int m);

/// zeta(s, a) with s >= 2 and 0 < a <= 1.
struct ZetaQuery {
  int s = 2;
  Rational a{1};
  Precision precision{};

  /// Throws DomainError when the invariants do not hold.
  void validate() const;
};

/// Hurwitz zeta by Euler-Maclaurin summation. The direct-sum cutoff starts
/// at max(16, precision/4) and the Bernoulli correction stops once the next
/// term is below 2^(-precision-8); if the correction terms start growing
/// first, the cutoff is doubled.
BigFloat hurwitz_zeta(const ZetaQuery& q);

/// Same evaluator for any rational a > 0 (used by shift-identity checks).
BigFloat hurwitz_zeta(int s, const Rational& a, Precision precision);

/// Both sides of the cot reflection identity
///   zeta(n, 1-x) + (-1)^n zeta(n, x)
///     = (-1)^n pi^n / (n-1)! * [T(n-1,1) + sum_{k=1}^n T(n,k)/k cot^k(pi x)]
/// and their absolute difference.
struct ReflectionCheck {
  BigFloat lhs;
  BigFloat rhs;
  BigFloat residual;
};

/// Requires n >= 2 and 0 < x < 1; throws DomainError otherwise.
ReflectionCheck reflection_identity(int n, const Rational& x, Precision precision);
BigFloat reflection_identity_residual(int n, const Rational& x, Precision precision);

}  // namespace tansec
