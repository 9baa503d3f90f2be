#include "tansec/polys/derivative_polynomials.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <string>

#include "tansec/algebra/gaussian.hpp"
#include "tansec/errors.hpp"

namespace tansec {

namespace {

void require_index(int n) {
  if (n < 0) throw DomainError("polynomial index must be nonnegative, got " + std::to_string(n));
}

// (-1)^(numerator/2) for a term known to be nonzero. An odd numerator means
// a parity-forbidden term survived.
ExactInt half_exponent_sign(int numerator, PolyFamily family, int n, int k) {
  if (numerator % 2 != 0) {
    throw InvariantError("half-integral sign exponent on nonzero term k=" + std::to_string(k) + " of " +
                         std::string(to_string(family)) + "_" + std::to_string(n));
  }
  const int half = numerator / 2;
  return (half % 2 == 0) ? ExactInt(1) : ExactInt(-1);
}

ExactInt exact_quotient(const ExactInt& value, int k, int n) {
  const ExactInt divisor(k);
  if (!value.is_divisible_by(divisor)) {
    throw InvariantError("T(" + std::to_string(n + 1) + "," + std::to_string(k) + ") not divisible by " +
                         std::to_string(k));
  }
  return value / divisor;
}

void require_kinds(const NumberTriangle& tangent, const NumberTriangle& secant) {
  if (tangent.kind() != TriangleKind::TangentOrderK || secant.kind() != TriangleKind::SecantOrderK)
    throw std::invalid_argument("expected a tangent and a secant triangle");
}

void require_rows(const NumberTriangle& tri, TriangleKind kind, int rows) {
  if (tri.kind() != kind) throw std::invalid_argument("wrong triangle kind: " + std::string(to_string(tri.kind())));
  if (tri.max_n() < rows) {
    throw DomainError(std::string(to_string(kind)) + " triangle must reach row " + std::to_string(rows));
  }
}

// Coefficient of x^k in the closed form, or zero. Shared by the dense and
// parity-compressed builders.
ExactInt closed_coefficient(PolyFamily family, int n, int k, const NumberTriangle& tangent,
                            const NumberTriangle& secant) {
  const bool hyper = is_hyperbolic(family);
  if (is_tangent_like(family)) {
    if (k == 0) {
      const ExactInt& t = tangent.at(n, 1);
      if (t.is_zero()) return {};
      return hyper ? half_exponent_sign(n - 1, family, n, k) * t : t;
    }
    const ExactInt& t = tangent.at(n + 1, k);
    if (t.is_zero()) return {};
    ExactInt c = exact_quotient(t, k, n);
    return hyper ? half_exponent_sign(n + k - 1, family, n, k) * c : c;
  }
  const ExactInt& s = secant.at(n, k);
  if (s.is_zero()) return {};
  return hyper ? half_exponent_sign(n + k, family, n, k) * s : s;
}

}  // namespace

std::string_view to_string(PolyFamily family) {
  switch (family) {
    case PolyFamily::P: return "P";
    case PolyFamily::Q: return "Q";
    case PolyFamily::HyperP: return "HyperP";
    case PolyFamily::HyperQ: return "HyperQ";
  }
  return "unknown";
}

PolyFamily parse_poly_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "p") return PolyFamily::P;
  if (lower == "q") return PolyFamily::Q;
  if (lower == "hyperp") return PolyFamily::HyperP;
  if (lower == "hyperq") return PolyFamily::HyperQ;
  throw std::invalid_argument("unknown polynomial family: " + std::string(text));
}

IntPolynomial derivative_polynomial_closed(PolyFamily family, int n, const NumberTriangle& tangent,
                                           const NumberTriangle& secant) {
  require_index(n);
  require_kinds(tangent, secant);
  if (is_tangent_like(family)) {
    require_rows(tangent, TriangleKind::TangentOrderK, n + 1);
  } else {
    require_rows(secant, TriangleKind::SecantOrderK, n);
  }
  const int degree = family_degree(family, n);
  std::vector<ExactInt> coeffs(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) coeffs[static_cast<std::size_t>(k)] = closed_coefficient(family, n, k, tangent, secant);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial derivative_polynomial_closed(PolyFamily family, int n) {
  require_index(n);
  return derivative_polynomial_closed(family, n, build_tangent_triangle(n + 1), build_secant_triangle(n));
}

std::vector<IntPolynomial> recurrence_sequence(PolyFamily family, int max_n) {
  require_index(max_n);
  const bool hyper = is_hyperbolic(family);
  const IntPolynomial x{ExactInt(0), ExactInt(1)};
  const IntPolynomial factor{ExactInt(1), ExactInt(0), ExactInt(hyper ? -1 : 1)};  // 1 +- x^2
  const IntPolynomial shift = hyper ? -x : x;

  std::vector<IntPolynomial> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  out.push_back(is_tangent_like(family) ? x : IntPolynomial{ExactInt(1)});
  for (int n = 1; n <= max_n; ++n) {
    const IntPolynomial& prev = out.back();
    IntPolynomial next = factor * derivative(prev);
    if (!is_tangent_like(family)) next += shift * prev;
    out.push_back(std::move(next));
  }
  return out;
}

IntPolynomial derivative_polynomial_recurrence(PolyFamily family, int n) {
  return std::move(recurrence_sequence(family, n).back());
}

IntPolynomial ParityForm::to_polynomial() const {
  IntPolynomial p;
  for (const auto& [exponent, coefficient] : terms) {
    p += IntPolynomial::monomial(coefficient, static_cast<std::size_t>(exponent));
  }
  return p;
}

ParityForm parity_form(PolyFamily family, int n, const NumberTriangle& tangent, const NumberTriangle& secant) {
  require_index(n);
  ParityForm form{family, n, {}};
  auto push = [&](int k) {
    ExactInt c = closed_coefficient(family, n, k, tangent, secant);
    if (!c.is_zero()) form.terms.emplace_back(k, std::move(c));
  };
  require_kinds(tangent, secant);
  if (is_tangent_like(family)) {
    require_rows(tangent, TriangleKind::TangentOrderK, n + 1);
    // Odd n: constant T(n,1) plus even powers. Even n: odd powers only.
    if (n % 2 == 1) push(0);
    for (int k = (n % 2 == 1) ? 2 : 1; k <= n + 1; k += 2) push(k);
  } else {
    require_rows(secant, TriangleKind::SecantOrderK, n);
    for (int k = n % 2; k <= n; k += 2) push(k);
  }
  return form;
}

ParityForm parity_form(PolyFamily family, int n) {
  require_index(n);
  return parity_form(family, n, build_tangent_triangle(n + 1), build_secant_triangle(n));
}

bool satisfies_symmetry(PolyFamily family, int n, const IntPolynomial& p) {
  const bool odd = is_tangent_like(family) ? (n + 1) % 2 != 0 : n % 2 != 0;
  return p.reflected() == (odd ? -p : p);
}

IntPolynomial transport_to_hyperbolic(PolyFamily trig_family, int n, const IntPolynomial& trig_poly) {
  if (is_hyperbolic(trig_family)) throw std::invalid_argument("transport source must be P or Q");
  require_index(n);
  const int shift = is_tangent_like(trig_family) ? n - 1 : n;
  auto coeffs = trig_poly.coefficients();
  std::vector<ExactInt> out(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const int e = ((shift + static_cast<int>(k)) % 4 + 4) % 4;
    const GaussianInt value = pow(GaussianInt::i(), static_cast<unsigned long>(e)) * GaussianInt{coeffs[k], ExactInt()};
    if (!value.is_real()) {
      throw NonRealResult("transport of " + std::string(to_string(trig_family)) + "_" + std::to_string(n) +
                          " left an imaginary coefficient at x^" + std::to_string(k));
    }
    out[k] = value.re;
  }
  return IntPolynomial(std::move(out));
}

DerivativePolynomials& DerivativePolynomials::shared() {
  static DerivativePolynomials instance;
  return instance;
}

void DerivativePolynomials::ensure_triangles(int min_n) {
  if (tangent_ && tangent_->max_n() >= min_n) return;
  const int current = tangent_ ? tangent_->max_n() : 0;
  const int target = std::max({min_n, 2 * current, 16});
  tangent_ = std::make_shared<const NumberTriangle>(build_tangent_triangle(target));
  secant_ = std::make_shared<const NumberTriangle>(build_secant_triangle(target));
}

std::shared_ptr<const NumberTriangle> DerivativePolynomials::tangent_triangle(int min_n) {
  {
    std::shared_lock lock(mutex_);
    if (tangent_ && tangent_->max_n() >= min_n) return tangent_;
  }
  std::unique_lock lock(mutex_);
  ensure_triangles(min_n);
  return tangent_;
}

std::shared_ptr<const NumberTriangle> DerivativePolynomials::secant_triangle(int min_n) {
  {
    std::shared_lock lock(mutex_);
    if (secant_ && secant_->max_n() >= min_n) return secant_;
  }
  std::unique_lock lock(mutex_);
  ensure_triangles(min_n);
  return secant_;
}

const IntPolynomial& DerivativePolynomials::get(PolyFamily family, int n) {
  require_index(n);
  const auto key = std::make_pair(family, n);
  {
    std::shared_lock lock(mutex_);
    if (auto it = polys_.find(key); it != polys_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  if (auto it = polys_.find(key); it != polys_.end()) return it->second;
  ensure_triangles(n + 1);
  auto [it, inserted] = polys_.emplace(key, derivative_polynomial_closed(family, n, *tangent_, *secant_));
  return it->second;
}

}  // namespace tansec
