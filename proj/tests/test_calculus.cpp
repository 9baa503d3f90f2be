#include <doctest.h>

#include "tansec/calculus/derivatives.hpp"
#include "tansec/errors.hpp"

using namespace tansec;

namespace {

const Precision kP{256};

BigFloat at(const char* text, Precision p = kP) { return BigFloat(Rational::from_string(text), p); }

BigFloat relative_error(const BigFloat& value, const BigFloat& reference) {
  const BigFloat scale = std::max(BigFloat(1, value.precision()), abs(reference));
  return abs(value - reference) / scale;
}

// n-th central difference of f with step h, using only the function values.
BigFloat central_difference(DerivKind kind, int n, const BigFloat& x, const BigFloat& h) {
  BigFloat sum(x.precision());
  ExactInt binom(1);
  for (int j = 0; j <= n; ++j) {
    // offset (n/2 - j) h
    const BigFloat offset = BigFloat(Rational(ExactInt(n - 2 * j), ExactInt(2)), x.precision()) * h;
    BigFloat term = BigFloat(binom, x.precision()) * evaluate_function(kind, x + offset);
    sum = (j % 2 == 0) ? sum + term : sum - term;
    binom = binom * ExactInt(n - j) / ExactInt(j + 1);
  }
  return sum / pow(h, n);
}

}  // namespace

TEST_CASE("kind table") {
  for (DerivKind kind : kAllDerivKinds) {
    const KindRule r = rule_for(kind);
    const bool plain = kind == DerivKind::Tan || kind == DerivKind::Cot || kind == DerivKind::Tanh || kind == DerivKind::Coth;
    CHECK((r.prefactor == Prefactor::One) == plain);
    CHECK(parse_deriv_kind(to_string(kind)) == kind);
  }
  CHECK(rule_for(DerivKind::Csc).alternating);
  CHECK_FALSE(rule_for(DerivKind::Csch).alternating);
  CHECK(parse_deriv_kind("SECH") == DerivKind::Sech);
  CHECK_THROWS_AS(parse_deriv_kind("arctan"), std::invalid_argument);
}

TEST_CASE("nth_derivative_exact examples") {
  const ExactDerivative sec2 = nth_derivative_exact(DerivKind::Sec, 2, Rational(0));
  CHECK(sec2.coefficient == Rational(1));
  CHECK(sec2.prefactor == Prefactor::Sec);

  // recurrence oracle: -P_1(1)
  const Rational oracle = -eval_exact(derivative_polynomial_recurrence(PolyFamily::P, 1), Rational(1));
  CHECK(oracle == Rational(-2));
  CHECK(nth_derivative_exact(DerivKind::Cot, 1, Rational(1)) == ExactDerivative{Rational(-2), Prefactor::One});

  CHECK(nth_derivative_exact(DerivKind::Csch, 0, Rational(5)) == ExactDerivative{Rational(1), Prefactor::Csch});
  CHECK_THROWS_AS(nth_derivative_exact(DerivKind::Tan, -1, Rational(0)), DomainError);
}

TEST_CASE("transport consistency: cot and tan share P_n up to (-1)^n") {
  for (int n = 0; n <= 100; ++n) {
    const IntPolynomial tan_u = derivative_u_polynomial(DerivKind::Tan, n);
    const IntPolynomial cot_u = derivative_u_polynomial(DerivKind::Cot, n);
    CHECK(cot_u == (n % 2 == 0 ? tan_u : -tan_u));
    const IntPolynomial sec_u = derivative_u_polynomial(DerivKind::Sec, n);
    const IntPolynomial csc_u = derivative_u_polynomial(DerivKind::Csc, n);
    CHECK(csc_u == (n % 2 == 0 ? sec_u : -sec_u));
  }
}

TEST_CASE("parity of the u-polynomial") {
  for (int n = 0; n <= 60; ++n) {
    for (DerivKind kind : kAllDerivKinds) {
      const IntPolynomial p = derivative_u_polynomial(kind, n);
      const bool secant_like = rule_for(kind).prefactor != Prefactor::One;
      // tangent-like: parity opposite to n; secant-like: parity matches n
      const bool odd = secant_like ? n % 2 == 1 : n % 2 == 0;
      CHECK(p.reflected() == (odd ? -p : p));
    }
  }
}

TEST_CASE("nth_derivative_numeric examples") {
  CHECK(nth_derivative_numeric(DerivKind::Tan, 1, BigFloat(0, kP), kP) == BigFloat(1, kP));
  const BigFloat half_pi = BigFloat::pi(kP.with_guard()) / BigFloat(2, kP.with_guard());
  const BigFloat cot2 = nth_derivative_numeric(DerivKind::Cot, 2, half_pi, kP);
  CHECK(abs(cot2) < BigFloat::pow2(-kP.bits + 8, kP));
  CHECK(nth_derivative_numeric(DerivKind::Tanh, 2, BigFloat(0, kP), kP).is_zero());
  CHECK(nth_derivative_numeric(DerivKind::Sec, 3, at("0.3"), kP).precision() == kP);
}

TEST_CASE("numeric mode rejects poles and oversized arguments") {
  const BigFloat half_pi = BigFloat::pi(kP.with_guard()) / BigFloat(2, kP.with_guard());
  CHECK_THROWS_AS(nth_derivative_numeric(DerivKind::Tan, 1, half_pi, kP), PoleError);
  CHECK_THROWS_AS(nth_derivative_numeric(DerivKind::Sec, 0, -half_pi, kP), PoleError);
  CHECK_THROWS_AS(nth_derivative_numeric(DerivKind::Cot, 3, BigFloat(0, kP), kP), PoleError);
  CHECK_THROWS_AS(nth_derivative_numeric(DerivKind::Csc, 3, BigFloat::pi(kP.with_guard()), kP), PoleError);
  CHECK_THROWS_AS(nth_derivative_numeric(DerivKind::Coth, 1, BigFloat(0, kP), kP), PoleError);
  CHECK_THROWS_AS(nth_derivative_numeric(DerivKind::Csch, 1, BigFloat::pow2(-200, kP), kP), PoleError);
  CHECK_NOTHROW(nth_derivative_numeric(DerivKind::Csch, 1, BigFloat::pow2(-100, kP), kP));
  CHECK_NOTHROW(nth_derivative_numeric(DerivKind::Tanh, 1, BigFloat(0, kP), kP));
  CHECK_THROWS_AS(nth_derivative_numeric(DerivKind::Tanh, 1, BigFloat::pow2(21, kP), kP), DomainError);
  CHECK_THROWS_AS(nth_derivative_numeric(DerivKind::Tan, 1, BigFloat(0, kP), Precision{32}), DomainError);
  CHECK_THROWS_AS(taylor_addition_oracle(DerivKind::Cot, BigFloat(0, kP), 3, kP), PoleError);
}

TEST_CASE("taylor addition oracle examples") {
  const auto tan0 = taylor_addition_oracle(DerivKind::Tan, BigFloat(0, kP), 3, kP);
  REQUIRE(tan0.size() == 4);
  CHECK(tan0[0] == BigFloat(0, kP));
  CHECK(tan0[1] == BigFloat(1, kP));
  CHECK(tan0[2] == BigFloat(0, kP));
  CHECK(abs(tan0[3] - BigFloat(2, kP)) < BigFloat::pow2(-kP.bits + 4, kP));

  const auto sec0 = taylor_addition_oracle(DerivKind::Sec, BigFloat(0, kP), 2, kP);
  CHECK(sec0[0] == BigFloat(1, kP));
  CHECK(sec0[1] == BigFloat(0, kP));
  CHECK(abs(sec0[2] - BigFloat(1, kP)) < BigFloat::pow2(-kP.bits + 4, kP));

  const BigFloat quarter_pi = BigFloat::pi(kP.with_guard()) / BigFloat(4, kP.with_guard());
  const auto cot = taylor_addition_oracle(DerivKind::Cot, quarter_pi, 1, kP);
  CHECK(abs(cot[1] + BigFloat(2, kP)) < BigFloat::pow2(-kP.bits + 8, kP));
}

TEST_CASE("numeric closed form agrees with the addition-formula oracle") {
  const BigFloat tolerance = BigFloat::pow2(-(kP.bits - 48), kP);
  for (DerivKind kind : kAllDerivKinds) {
    for (const char* point : {"-1.3", "0.45", "2.3"}) {
      const BigFloat x = at(point);
      const auto reference = taylor_addition_oracle(kind, x, 20, kP);
      for (int n = 0; n <= 20; ++n) {
        CHECK(relative_error(nth_derivative_numeric(kind, n, x, kP), reference[static_cast<std::size_t>(n)]) < tolerance);
      }
    }
  }
}

TEST_CASE("finite-difference sanity for n <= 4") {
  const BigFloat h = BigFloat::pow2(-40, kP);
  const BigFloat tolerance = BigFloat::pow2(-60, kP);
  const char* grid[] = {"-2.7", "-1.9", "-1.3", "-0.6", "-0.25", "0.2", "0.45", "1.1", "2.3", "2.9"};
  for (DerivKind kind : kAllDerivKinds) {
    for (const char* point : grid) {
      const BigFloat x = at(point);
      for (int n = 1; n <= 4; ++n) {
        const BigFloat fd = central_difference(kind, n, x, h);
        CHECK(relative_error(fd, nth_derivative_numeric(kind, n, x, kP)) < tolerance);
      }
    }
  }
}

TEST_CASE("cot closed form with Stirling subset numbers") {
  CHECK(adamchik_cot_closed_form(1, Rational(1)) == Rational(-2));
  CHECK(adamchik_cot_closed_form(2, Rational(1)) == Rational(4));
  CHECK(adamchik_cot_closed_form(2, Rational(0)) == Rational(0));
  CHECK_THROWS_AS(adamchik_cot_closed_form(0, Rational(1)), DomainError);

  const Rational grid[] = {Rational(0),  Rational(1),  Rational(-1), Rational(ExactInt(1), ExactInt(2)),
                           Rational(ExactInt(-1), ExactInt(2)), Rational(2), Rational(-2), Rational(ExactInt(3), ExactInt(7))};
  for (int n = 1; n <= 40; ++n) {
    for (const Rational& u : grid) {
      CHECK(adamchik_cot_closed_form(n, u) == nth_derivative_exact(DerivKind::Cot, n, u).coefficient);
    }
  }
}
