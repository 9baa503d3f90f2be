#include "tansec/zeta/hurwitz.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "tansec/errors.hpp"
#include "tansec/numbers/triangle.hpp"

namespace tansec {

namespace {

class BernoulliCache {
 public:
  Rational get(int m) {
    {
      std::shared_lock lock(mutex_);
      if (m < static_cast<int>(values_.size())) return values_[static_cast<std::size_t>(m)];
    }
    std::unique_lock lock(mutex_);
    extend(m);
    return values_[static_cast<std::size_t>(m)];
  }

 private:
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  void extend(int m) {
    if (values_.empty()) values_.emplace_back(1);
    for (int next = static_cast<int>(values_.size()); next <= m; ++next) {
      if (next > 1 && next % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      Rational acc;
      ExactInt binom(1);  // C(next+1, j)
      for (int j = 0; j < next; ++j) {
        if (!values_[static_cast<std::size_t>(j)].is_zero()) acc += Rational(binom) * values_[static_cast<std::size_t>(j)];
        binom = binom * ExactInt(next + 1 - j) / ExactInt(j + 1);
      }
      values_.push_back(-acc / Rational(next + 1));
    }
  }

  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

struct SumAttempt {
  BigFloat value;
  bool converged;
};

SumAttempt euler_maclaurin(int s, const Rational& a, long cutoff, Precision work, Precision target) {
  BigFloat sum(work);
  for (long m = 0; m < cutoff; ++m) sum += pow(BigFloat(Rational(m) + a, work), -s);

  const BigFloat z(Rational(cutoff) + a, work);
  sum += pow(z, 1 - s) / BigFloat(static_cast<long>(s - 1), work);
  sum += pow(z, -s) / BigFloat(2, work);

  const BigFloat threshold = BigFloat::pow2(-target.bits - 8, work);
  const BigFloat inv_z2 = BigFloat(1, work) / (z * z);
  BigFloat z_power = pow(z, -s - 1);  // z^(-s-2j+1) at j = 1
  ExactInt rising(s);                 // s (s+1) ... (s+2j-2)
  ExactInt factorial(2);              // (2j)!
  BigFloat previous_magnitude(work);
  for (int j = 1;; ++j) {
    if (j > 1) {
      rising *= ExactInt(s + 2 * j - 3) * ExactInt(s + 2 * j - 2);
      factorial *= ExactInt(2 * j - 1) * ExactInt(2 * j);
      z_power *= inv_z2;
    }
    const Rational weight = bernoulli(2 * j) * Rational(rising, factorial);
    const BigFloat term = BigFloat(weight, work) * z_power;
    const BigFloat magnitude = abs(term);
    if (magnitude < threshold) return {sum, true};
    if (j > 1 && magnitude >= previous_magnitude) return {sum, false};
    sum += term;
    previous_magnitude = magnitude;
  }
}

}  // namespace

Rational bernoulli(int m) {
  if (m < 0) throw DomainError("Bernoulli index must be nonnegative");
  return bernoulli_cache().get(m);
}

void ZetaQuery::validate() const {
  require_precision(precision);
  if (s < 2) throw DomainError("zeta order s must be at least 2, got " + std::to_string(s));
  if (a.sign() <= 0 || a > Rational(1)) throw DomainError("zeta parameter a must lie in (0, 1], got " + a.to_string());
}

BigFloat hurwitz_zeta(const ZetaQuery& q) {
  q.validate();
  return hurwitz_zeta(q.s, q.a, q.precision);
}

BigFloat hurwitz_zeta(int s, const Rational& a, Precision precision) {
  require_precision(precision);
  if (s < 2) throw DomainError("zeta order s must be at least 2, got " + std::to_string(s));
  if (a.sign() <= 0) throw DomainError("zeta parameter a must be positive");
  const Precision work = precision.with_guard();
  for (long cutoff = std::max(16L, precision.bits / 4);; cutoff *= 2) {
    SumAttempt attempt = euler_maclaurin(s, a, cutoff, work, precision);
    if (attempt.converged) return attempt.value.rounded(precision);
  }
}

ReflectionCheck reflection_identity(int n, const Rational& x, Precision precision) {
  require_precision(precision);
  if (n < 2) throw DomainError("reflection identity needs n >= 2, got " + std::to_string(n));
  if (x.sign() <= 0 || x >= Rational(1)) throw DomainError("reflection identity needs 0 < x < 1, got " + x.to_string());

  const Precision work = precision.with_guard();
  const bool even = n % 2 == 0;

  BigFloat lhs = hurwitz_zeta(ZetaQuery{n, Rational(1) - x, work});
  const BigFloat zeta_x = hurwitz_zeta(ZetaQuery{n, x, work});
  lhs = even ? lhs + zeta_x : lhs - zeta_x;

  const BigFloat pi = BigFloat::pi(work);
  const BigFloat c = cot(pi * BigFloat(x, work));
  const NumberTriangle tangent = build_tangent_triangle(n);
  BigFloat bracket(tangent.at(n - 1, 1), work);
  BigFloat c_power(1, work);
  for (int k = 1; k <= n; ++k) {
    c_power *= c;
    const ExactInt& t = tangent.at(n, k);
    if (t.is_zero()) continue;
    if (!t.is_divisible_by(ExactInt(k))) {
      throw InvariantError("T(" + std::to_string(n) + "," + std::to_string(k) + ") not divisible by k");
    }
    bracket += BigFloat(t / ExactInt(k), work) * c_power;
  }
  BigFloat rhs = pow(pi, n) / BigFloat(ExactInt::factorial(static_cast<unsigned long>(n - 1)), work) * bracket;
  if (!even) rhs = -rhs;

  BigFloat residual = abs(lhs - rhs);
  return {lhs.rounded(precision), rhs.rounded(precision), residual.rounded(precision)};
}

BigFloat reflection_identity_residual(int n, const Rational& x, Precision precision) {
  return reflection_identity(n, x, precision).residual;
}

}  // namespace tansec
