#include <doctest.h>

#include <thread>

#include "tansec/algebra/gaussian.hpp"
#include "tansec/errors.hpp"
#include "tansec/polys/derivative_polynomials.hpp"

using namespace tansec;

namespace {

IntPolynomial poly(std::initializer_list<std::int64_t> ascending) {
  std::vector<ExactInt> c;
  for (auto v : ascending) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

constexpr PolyFamily kFamilies[] = {PolyFamily::P, PolyFamily::Q, PolyFamily::HyperP, PolyFamily::HyperQ};

// Independent check of i^shift * p(i x) using full Gaussian evaluation of
// each monomial, rather than the coefficient-wise sign rule.
bool transport_matches(const IntPolynomial& trig, const IntPolynomial& hyper, int shift) {
  const int degree = std::max(trig.degree(), hyper.degree());
  for (int k = 0; k <= degree; ++k) {
    GaussianInt value{trig.coefficient(static_cast<std::size_t>(k)), ExactInt()};
    value *= pow(GaussianInt::i(), static_cast<unsigned long>(k));
    value *= pow(GaussianInt::i(), static_cast<unsigned long>((shift % 4 + 4) % 4));
    if (!(value == GaussianInt{hyper.coefficient(static_cast<std::size_t>(k)), ExactInt()})) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("closed-form examples") {
  CHECK(derivative_polynomial_closed(PolyFamily::P, 3) == poly({2, 0, 8, 0, 6}));
  CHECK(derivative_polynomial_closed(PolyFamily::HyperQ, 4) == poly({5, 0, -28, 0, 24}));
  CHECK(derivative_polynomial_closed(PolyFamily::Q, 0) == poly({1}));
  CHECK(derivative_polynomial_closed(PolyFamily::P, 0) == poly({0, 1}));
  CHECK(derivative_polynomial_closed(PolyFamily::HyperP, 0) == poly({0, 1}));
  CHECK_THROWS_AS(derivative_polynomial_closed(PolyFamily::P, -1), DomainError);
}

TEST_CASE("recurrence examples") {
  CHECK(derivative_polynomial_recurrence(PolyFamily::P, 2) == poly({0, 2, 0, 2}));
  CHECK(derivative_polynomial_recurrence(PolyFamily::HyperP, 1) == poly({1, 0, -1}));
  CHECK(derivative_polynomial_recurrence(PolyFamily::Q, 5) == poly({0, 61, 0, 180, 0, 120}));
  CHECK(derivative_polynomial_recurrence(PolyFamily::HyperQ, 0) == poly({1}));
}

TEST_CASE("closed form needs deep enough triangles") {
  const NumberTriangle t = build_tangent_triangle(4);
  const NumberTriangle s = build_secant_triangle(4);
  CHECK_THROWS_AS(derivative_polynomial_closed(PolyFamily::P, 4, t, s), DomainError);
  CHECK_NOTHROW(derivative_polynomial_closed(PolyFamily::P, 3, t, s));
  CHECK_NOTHROW(derivative_polynomial_closed(PolyFamily::Q, 4, t, s));
  CHECK_THROWS_AS(derivative_polynomial_closed(PolyFamily::Q, 3, s, s), std::invalid_argument);
}

TEST_CASE("closed form aborts on a corrupt triangle") {
  // T(3,2) = 0 is parity-forbidden; a nonzero value must trip the sign check.
  auto rows = std::vector<std::vector<ExactInt>>{
      {ExactInt(1)}, {ExactInt(0), ExactInt(1)}, {ExactInt(0), ExactInt(0), ExactInt(2)},
      {ExactInt(0), ExactInt(2), ExactInt(4), ExactInt(6)}};
  const NumberTriangle bad_parity(TriangleKind::TangentOrderK, rows);
  const NumberTriangle s = build_secant_triangle(3);
  CHECK_THROWS_AS(derivative_polynomial_closed(PolyFamily::HyperP, 2, bad_parity, s), InvariantError);

  // T(3,3) = 7 is not divisible by 3.
  rows[3] = {ExactInt(0), ExactInt(2), ExactInt(0), ExactInt(7)};
  const NumberTriangle bad_divisor(TriangleKind::TangentOrderK, rows);
  CHECK_THROWS_AS(derivative_polynomial_closed(PolyFamily::P, 2, bad_divisor, s), InvariantError);
}

TEST_CASE("parity form examples") {
  using Terms = std::vector<std::pair<int, ExactInt>>;
  CHECK(parity_form(PolyFamily::P, 2).terms == Terms{{1, ExactInt(2)}, {3, ExactInt(2)}});
  CHECK(parity_form(PolyFamily::P, 3).terms == Terms{{0, ExactInt(2)}, {2, ExactInt(8)}, {4, ExactInt(6)}});
  CHECK(parity_form(PolyFamily::Q, 1).terms == Terms{{1, ExactInt(1)}});
  CHECK(parity_form(PolyFamily::HyperQ, 4).terms == Terms{{0, ExactInt(5)}, {2, ExactInt(-28)}, {4, ExactInt(24)}});
}

TEST_CASE("parity form matches the dense polynomial and has single-parity exponents") {
  const NumberTriangle t = build_tangent_triangle(61);
  const NumberTriangle s = build_secant_triangle(60);
  for (PolyFamily f : kFamilies) {
    for (int n = 0; n <= 60; ++n) {
      const ParityForm form = parity_form(f, n, t, s);
      CHECK(form.to_polynomial() == derivative_polynomial_closed(f, n, t, s));
      for (const auto& [e, c] : form.terms) {
        CHECK_FALSE(c.is_zero());
        if (e != 0 || !is_tangent_like(f)) CHECK((e + n + (is_tangent_like(f) ? 1 : 0)) % 2 == 0);
      }
    }
  }
}

TEST_CASE("dual construction agrees for n <= 200") {
  const int max_n = 200;
  const NumberTriangle t = build_tangent_triangle(max_n + 1);
  const NumberTriangle s = build_secant_triangle(max_n);
  for (PolyFamily f : kFamilies) {
    const auto seq = recurrence_sequence(f, max_n);
    for (int n = 0; n <= max_n; ++n) {
      CHECK(derivative_polynomial_closed(f, n, t, s) == seq[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("symmetry, base point, degree and leading coefficient for n <= 200") {
  const int max_n = 200;
  const NumberTriangle t = build_tangent_triangle(max_n + 1);
  const NumberTriangle s = build_secant_triangle(max_n);
  for (PolyFamily f : kFamilies) {
    const auto seq = recurrence_sequence(f, max_n);
    for (int n = 0; n <= max_n; ++n) {
      const IntPolynomial& p = seq[static_cast<std::size_t>(n)];
      CHECK(satisfies_symmetry(f, n, p));
      CHECK(p.degree() == family_degree(f, n));
      const ExactInt fact = ExactInt::factorial(static_cast<unsigned long>(n));
      if (f == PolyFamily::P || f == PolyFamily::Q) {
        CHECK(p.leading_coefficient() == fact);
      } else {
        CHECK(p.leading_coefficient().abs() == fact);
      }
      if (f == PolyFamily::P) CHECK(p.coefficient(0) == t.at(n, 1));
      if (f == PolyFamily::Q) CHECK(p.coefficient(0) == s.at(n, 0));
    }
  }
  CHECK_FALSE(satisfies_symmetry(PolyFamily::P, 2, poly({1, 2, 0, 2})));
}

TEST_CASE("complex transport between trigonometric and hyperbolic families for n <= 200") {
  const int max_n = 200;
  const auto p = recurrence_sequence(PolyFamily::P, max_n);
  const auto q = recurrence_sequence(PolyFamily::Q, max_n);
  const auto hp = recurrence_sequence(PolyFamily::HyperP, max_n);
  const auto hq = recurrence_sequence(PolyFamily::HyperQ, max_n);
  for (int n = 0; n <= max_n; ++n) {
    const auto i = static_cast<std::size_t>(n);
    CHECK(transport_to_hyperbolic(PolyFamily::P, n, p[i]) == hp[i]);
    CHECK(transport_to_hyperbolic(PolyFamily::Q, n, q[i]) == hq[i]);
    CHECK(transport_matches(p[i], hp[i], n - 1));
    CHECK(transport_matches(q[i], hq[i], n));
  }
  CHECK_THROWS_AS(transport_to_hyperbolic(PolyFamily::P, 2, poly({1, 1})), NonRealResult);
  CHECK_THROWS_AS(transport_to_hyperbolic(PolyFamily::HyperP, 2, p[2]), std::invalid_argument);
}

TEST_CASE("memo returns stable closed forms under concurrent readers") {
  DerivativePolynomials memo;
  const IntPolynomial& first = memo.get(PolyFamily::Q, 6);
  CHECK(first == poly({61, 0, 662, 0, 1320, 0, 720}));
  std::vector<std::thread> workers;
  std::vector<int> ok(4, 0);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&memo, &ok, w] {
      bool good = true;
      for (int n = 0; n <= 40; ++n) {
        for (PolyFamily f : kFamilies) good = good && memo.get(f, n).degree() == family_degree(f, n);
      }
      ok[static_cast<std::size_t>(w)] = good ? 1 : 0;
    });
  }
  for (auto& t : workers) t.join();
  for (int v : ok) CHECK(v == 1);
  CHECK(&memo.get(PolyFamily::Q, 6) == &first);
  CHECK(memo.tangent_triangle(100)->max_n() >= 100);
}

TEST_CASE("family names") {
  CHECK(parse_poly_family("hyperq") == PolyFamily::HyperQ);
  CHECK(to_string(PolyFamily::HyperP) == "HyperP");
  CHECK_THROWS_AS(parse_poly_family("R"), std::invalid_argument);
}
