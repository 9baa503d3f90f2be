#include "tansec/verify/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tansec/calculus/derivatives.hpp"
#include "tansec/io/format.hpp"
#include "tansec/numbers/series.hpp"
#include "tansec/numbers/triangle.hpp"
#include "tansec/zeta/hurwitz.hpp"

namespace tansec::verify {

namespace {

constexpr PolyFamily kFamilies[] = {PolyFamily::P, PolyFamily::Q, PolyFamily::HyperP, PolyFamily::HyperQ};

// Collects pass/fail for one case; remembers the first failure only.
class CaseBuilder {
 public:
  explicit CaseBuilder(std::string key, std::string scope) : key_(std::move(key)), scope_(std::move(scope)) {}

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what();
  }

  [[nodiscard]] CaseResult finish() const {
    if (failure_.empty()) return {key_, true, scope_ + ", " + std::to_string(checks_) + " checks"};
    return {key_, false, failure_};
  }

 private:
  std::string key_;
  std::string scope_;
  std::string failure_;
  long checks_ = 0;
};

std::string bound(int max_n) { return "n <= " + std::to_string(max_n); }

void golden_suite(std::vector<CaseResult>& out, int /*max_n*/) {
  const auto table = golden_table();
  for (PolyFamily family : kFamilies) {
    CaseBuilder c("golden/" + std::string(to_string(family)), "n <= 6");
    for (const auto& g : table) {
      if (g.family != family) continue;
      const auto closed = derivative_polynomial_closed(family, g.n);
      const auto recurrence = derivative_polynomial_recurrence(family, g.n);
      c.check(closed == g.poly, [&] { return "closed form differs at n = " + std::to_string(g.n); });
      c.check(recurrence == g.poly, [&] { return "recurrence differs at n = " + std::to_string(g.n); });
    }
    out.push_back(c.finish());
  }
}

void dual_suite(std::vector<CaseResult>& out, int max_n) {
  const NumberTriangle tangent = build_tangent_triangle(max_n + 1);
  const NumberTriangle secant = build_secant_triangle(max_n);
  for (PolyFamily family : kFamilies) {
    CaseBuilder c("dual/" + std::string(to_string(family)), bound(max_n));
    const auto seq = recurrence_sequence(family, max_n);
    for (int n = 0; n <= max_n; ++n) {
      c.check(derivative_polynomial_closed(family, n, tangent, secant) == seq[static_cast<std::size_t>(n)],
              [&] { return "closed form and recurrence differ at n = " + std::to_string(n); });
    }
    out.push_back(c.finish());
  }
}

void egf_suite(std::vector<CaseResult>& out, int max_n) {
  const int limit = std::min(max_n, 30);
  const NumberTriangle tangent = build_tangent_triangle(limit);
  const NumberTriangle secant = build_secant_triangle(limit);
  auto run = [&](SeriesFamily family, const NumberTriangle& tri, int min_k, const std::string& key) {
    CaseBuilder c(key, bound(limit));
    for (int k = min_k; k <= limit; ++k) {
      const SeriesCoefficients s = egf_coefficients(family, k, limit);
      ExactInt fact(1);
      for (int n = 0; n <= limit; ++n) {
        if (n > 0) fact *= ExactInt(n);
        const Rational scaled = Rational(fact) * s[static_cast<std::size_t>(n)];
        c.check(scaled == Rational(tri.at(n, k)),
                [&] { return "mismatch at (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")"; });
      }
    }
    out.push_back(c.finish());
  };
  run(SeriesFamily::TanPower, tangent, 1, "egf/tangent");
  run(SeriesFamily::SecTanPower, secant, 0, "egf/secant");
}

void classical_suite(std::vector<CaseResult>& out, int /*max_n*/) {
  const auto seq = classical_sequences(9);
  CaseBuilder c("classical/columns", "n <= 9");
  const std::pair<int, std::int64_t> tangent[] = {{1, 1}, {3, 2}, {5, 16}, {7, 272}, {9, 7936}};
  const std::pair<int, std::int64_t> euler[] = {{0, 1}, {2, 1}, {4, 5}, {6, 61}, {8, 1385}};
  for (auto [n, v] : tangent) {
    c.check(seq.tangent[static_cast<std::size_t>(n)] == ExactInt(v), [n = n] { return "T(" + std::to_string(n) + ",1)"; });
  }
  for (auto [n, v] : euler) {
    c.check(seq.euler[static_cast<std::size_t>(n)] == ExactInt(v), [n = n] { return "S(" + std::to_string(n) + ",0)"; });
  }
  out.push_back(c.finish());
}

void divisibility_suite(std::vector<CaseResult>& out, int max_n) {
  const NumberTriangle tangent = build_tangent_triangle(max_n + 1);
  CaseBuilder c("divisibility/tangent", bound(max_n));
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      c.check(tangent.at(n + 1, k).is_divisible_by(ExactInt(k)), [&] {
        return std::to_string(k) + " does not divide T(" + std::to_string(n + 1) + "," + std::to_string(k) + ")";
      });
    }
  }
  out.push_back(c.finish());
}

void symmetry_suite(std::vector<CaseResult>& out, int max_n) {
  DerivativePolynomials& memo = DerivativePolynomials::shared();
  for (PolyFamily family : kFamilies) {
    CaseBuilder c("symmetry/" + std::string(to_string(family)), bound(max_n));
    for (int n = 0; n <= max_n; ++n) {
      const IntPolynomial& p = memo.get(family, n);
      c.check(satisfies_symmetry(family, n, p), [&] { return "parity violated at n = " + std::to_string(n); });
      c.check(p.degree() == family_degree(family, n), [&] { return "wrong degree at n = " + std::to_string(n); });
      c.check(p.leading_coefficient().abs() == ExactInt::factorial(static_cast<unsigned long>(n)),
              [&] { return "leading coefficient is not n! at n = " + std::to_string(n); });
    }
    out.push_back(c.finish());
  }
  const NumberTriangle tangent = build_tangent_triangle(max_n);
  const NumberTriangle secant = build_secant_triangle(max_n);
  CaseBuilder c("symmetry/triangles", bound(max_n));
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const bool tangent_allowed = k >= 1 && (n - k) % 2 == 0;
      const bool secant_allowed = (n - k) % 2 == 0;
      c.check(tangent.at(n, k).is_zero() != tangent_allowed || (n == 0 && k == 0),
              [&] { return "T(" + std::to_string(n) + "," + std::to_string(k) + ") breaks the parity pattern"; });
      c.check(secant.at(n, k).is_zero() != secant_allowed,
              [&] { return "S(" + std::to_string(n) + "," + std::to_string(k) + ") breaks the parity pattern"; });
    }
    c.check(secant.at(n, n) == ExactInt::factorial(static_cast<unsigned long>(n)), [&] { return "S(n,n) != n!"; });
    if (n >= 1) c.check(tangent.at(n, n) == ExactInt::factorial(static_cast<unsigned long>(n)), [&] { return "T(n,n) != n!"; });
  }
  out.push_back(c.finish());
}

void transport_suite(std::vector<CaseResult>& out, int max_n) {
  DerivativePolynomials& memo = DerivativePolynomials::shared();
  const std::pair<PolyFamily, PolyFamily> pairs[] = {{PolyFamily::P, PolyFamily::HyperP}, {PolyFamily::Q, PolyFamily::HyperQ}};
  for (auto [trig, hyper] : pairs) {
    CaseBuilder c("transport/" + std::string(to_string(hyper)), bound(max_n));
    for (int n = 0; n <= max_n; ++n) {
      c.check(transport_to_hyperbolic(trig, n, memo.get(trig, n)) == memo.get(hyper, n),
              [&] { return "i-transport fails at n = " + std::to_string(n); });
    }
    out.push_back(c.finish());
  }
  CaseBuilder c("transport/cot-vs-tan", bound(max_n));
  for (int n = 0; n <= max_n; ++n) {
    const IntPolynomial tan_poly = derivative_u_polynomial(DerivKind::Tan, n, memo);
    const IntPolynomial cot_poly = derivative_u_polynomial(DerivKind::Cot, n, memo);
    c.check(cot_poly == (n % 2 == 0 ? tan_poly : -tan_poly), [&] { return "cot/tan mismatch at n = " + std::to_string(n); });
  }
  out.push_back(c.finish());
}

void adamchik_suite(std::vector<CaseResult>& out, int max_n) {
  const int limit = std::min(max_n, 40);
  const Rational grid[] = {Rational(0),  Rational(1), Rational(-1),         Rational(1, 2), Rational(-1, 2),
                           Rational(2),  Rational(-2), Rational(3, 7)};
  CaseBuilder c("adamchik/cot", bound(limit));
  for (int n = 1; n <= limit; ++n) {
    for (const Rational& u : grid) {
      const Rational expected = nth_derivative_exact(DerivKind::Cot, n, u).coefficient;
      c.check(adamchik_cot_closed_form(n, u) == expected,
              [&] { return "mismatch at n = " + std::to_string(n) + ", u = " + u.to_string(); });
    }
  }
  out.push_back(c.finish());
}

void oracle_suite(std::vector<CaseResult>& out, int max_n) {
  const int limit = std::min(max_n, 20);
  const Precision precision{256};
  const BigFloat tolerance = BigFloat::pow2(-(precision.bits - 48), precision);
  const char* grid[] = {"-2.7", "-1.9", "-1.3", "-0.6", "-0.25", "0.2", "0.45", "1.1", "2.3", "2.9"};
  for (DerivKind kind : kAllDerivKinds) {
    CaseBuilder c("oracle/" + std::string(to_string(kind)), bound(limit) + ", 10 points");
    for (const char* point : grid) {
      const BigFloat x(Rational::from_string(point), precision);
      const auto reference = taylor_addition_oracle(kind, x, limit, precision);
      for (int n = 0; n <= limit; ++n) {
        const BigFloat value = nth_derivative_numeric(kind, n, x, precision);
        const BigFloat& ref = reference[static_cast<std::size_t>(n)];
        const BigFloat error = ref.is_zero() ? abs(value) : abs((value - ref) / ref);
        c.check(error < tolerance,
                [&] { return "n = " + std::to_string(n) + " at x = " + point + ": " + value.to_string(30) + " vs " + ref.to_string(30); });
      }
    }
    out.push_back(c.finish());
  }
}

void zeta_suite(std::vector<CaseResult>& out, int /*max_n*/) {
  const Precision precision{128};
  const BigFloat tolerance = BigFloat::pow2(-(precision.bits - 16), precision);
  const Rational grid[] = {Rational(1, 6), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(5, 6)};
  CaseBuilder c("zeta/reflection", "n = 2..8, 6 points");
  for (int n = 2; n <= 8; ++n) {
    for (const Rational& x : grid) {
      const BigFloat residual = reflection_identity_residual(n, x, precision);
      c.check(residual < tolerance,
              [&] { return "residual " + residual.to_string(6) + " at n = " + std::to_string(n) + ", x = " + x.to_string(); });
    }
  }
  out.push_back(c.finish());
}

using SuiteFn = void (*)(std::vector<CaseResult>&, int);

const std::map<std::string_view, SuiteFn>& registry() {
  static const std::map<std::string_view, SuiteFn> suites = {
      {"golden", golden_suite},       {"dual", dual_suite},         {"egf", egf_suite},
      {"classical", classical_suite}, {"divisibility", divisibility_suite},
      {"symmetry", symmetry_suite},   {"transport", transport_suite}, {"adamchik", adamchik_suite},
      {"oracle", oracle_suite},       {"zeta", zeta_suite},
  };
  return suites;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(std::string_view suite, int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  SuiteReport report;
  if (suite == "all") {
    for (const auto& [name, fn] : registry()) fn(report.cases, max_n);
  } else {
    auto it = registry().find(suite);
    if (it == registry().end()) throw std::invalid_argument("unknown suite: " + std::string(suite));
    it->second(report.cases, max_n);
  }
  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
  return report;
}

std::vector<GoldenPolynomial> golden_table() {
  // Upper sign of each printed pair is the trigonometric member.
  struct Row {
    int n;
    const char* trig;
    const char* hyper;
  };
  static const Row p_rows[] = {
      {0, "x", "x"},
      {1, "x^2 + 1", "-x^2 + 1"},
      {2, "2 x^3 + 2 x", "2 x^3 - 2 x"},
      {3, "6 x^4 + 8 x^2 + 2", "-6 x^4 + 8 x^2 - 2"},
      {4, "24 x^5 + 40 x^3 + 16 x", "24 x^5 - 40 x^3 + 16 x"},
      {5, "120 x^6 + 240 x^4 + 136 x^2 + 16", "-120 x^6 + 240 x^4 - 136 x^2 + 16"},
      {6, "720 x^7 + 1680 x^5 + 1232 x^3 + 272 x", "720 x^7 - 1680 x^5 + 1232 x^3 - 272 x"},
  };
  static const Row q_rows[] = {
      {0, "1", "1"},
      {1, "x", "-x"},
      {2, "2 x^2 + 1", "2 x^2 - 1"},
      {3, "6 x^3 + 5 x", "-6 x^3 + 5 x"},
      {4, "24 x^4 + 28 x^2 + 5", "24 x^4 - 28 x^2 + 5"},
      {5, "120 x^5 + 180 x^3 + 61 x", "-120 x^5 + 180 x^3 - 61 x"},
      {6, "720 x^6 + 1320 x^4 + 662 x^2 + 61", "720 x^6 - 1320 x^4 + 662 x^2 - 61"},
  };
  std::vector<GoldenPolynomial> out;
  for (const Row& r : p_rows) {
    out.push_back({PolyFamily::P, r.n, io::parse_latex_polynomial(r.trig)});
    out.push_back({PolyFamily::HyperP, r.n, io::parse_latex_polynomial(r.hyper)});
  }
  for (const Row& r : q_rows) {
    out.push_back({PolyFamily::Q, r.n, io::parse_latex_polynomial(r.trig)});
    out.push_back({PolyFamily::HyperQ, r.n, io::parse_latex_polynomial(r.hyper)});
  }
  return out;
}

}  // namespace tansec::verify
