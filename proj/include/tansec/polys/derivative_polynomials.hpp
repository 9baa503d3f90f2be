#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string_view>
#include <utility>
#include <vector>

#include "tansec/algebra/int_polynomial.hpp"
#include "tansec/numbers/triangle.hpp"

namespace tansec {

/// P_n, Q_n: derivative polynomials of tan and sec.
/// HyperP, HyperQ: their analogs for tanh and sech.
enum class PolyFamily { P, Q, HyperP, HyperQ };

std::string_view to_string(PolyFamily family);
/// Accepts "P", "Q", "HyperP", "HyperQ" (case-insensitive). Throws std::invalid_argument.
PolyFamily parse_poly_family(std::string_view text);

[[nodiscard]] constexpr bool is_hyperbolic(PolyFamily f) { return f == PolyFamily::HyperP || f == PolyFamily::HyperQ; }
[[nodiscard]] constexpr bool is_tangent_like(PolyFamily f) { return f == PolyFamily::P || f == PolyFamily::HyperP; }
/// Degree of the index-n member: n+1 for P/HyperP, n for Q/HyperQ.
[[nodiscard]] constexpr int family_degree(PolyFamily f, int n) { return is_tangent_like(f) ? n + 1 : n; }

/// Closed form from the order-k tangent/secant numbers:
///   P_n(x) = T(n,1) + sum_{k=1}^{n+1} T(n+1,k)/k x^k,   Q_n(x) = sum_k S(n,k) x^k,
/// with signs (-1)^((n+k-1)/2) resp. (-1)^((n+k)/2) for the hyperbolic families.
///
/// `tangent` must reach row n+1 and `secant` row n. Throws InvariantError if
/// a division by k is inexact or a sign exponent is half-integral on a
/// nonzero term; either means the triangles are corrupt.
IntPolynomial derivative_polynomial_closed(PolyFamily family, int n, const NumberTriangle& tangent,
                                           const NumberTriangle& secant);
IntPolynomial derivative_polynomial_closed(PolyFamily family, int n);

/// n-th iterate of the chain-rule recurrence:
///   P: x, (1+x^2) p'     Q: 1, (1+x^2) q' + x q
///   HyperP: x, (1-x^2) p'     HyperQ: 1, (1-x^2) q' - x q
IntPolynomial derivative_polynomial_recurrence(PolyFamily family, int n);
/// All iterates 0..max_n.
std::vector<IntPolynomial> recurrence_sequence(PolyFamily family, int max_n);

/// Nonzero terms only, as (exponent, coefficient) pairs in ascending exponent.
struct ParityForm {
  PolyFamily family;
  int n;
  std::vector<std::pair<int, ExactInt>> terms;

  [[nodiscard]] IntPolynomial to_polynomial() const;
};

/// Builds only the parity-surviving terms, stepping k by two.
ParityForm parity_form(PolyFamily family, int n, const NumberTriangle& tangent, const NumberTriangle& secant);
ParityForm parity_form(PolyFamily family, int n);

/// p(-x) == (-1)^(n+1) p(x) for P/HyperP, (-1)^n p(x) for Q/HyperQ.
bool satisfies_symmetry(PolyFamily family, int n, const IntPolynomial& p);

/// Maps P_n to i^(n-1) P_n(i x) or Q_n to i^n Q_n(i x) in Gaussian integer
/// arithmetic. `trig_family` must be P or Q. Throws NonRealResult if any
/// coefficient comes out with a nonzero imaginary part.
IntPolynomial transport_to_hyperbolic(PolyFamily trig_family, int n, const IntPolynomial& trig_poly);

/// Memo of closed-form derivative polynomials keyed by (family, n).
///
/// Readers share a lock; a miss takes the exclusive lock, grows the backing
/// triangles if needed and inserts. Entries are never removed, so returned
/// references stay valid for the lifetime of the memo.
class DerivativePolynomials {
 public:
  DerivativePolynomials() = default;
  DerivativePolynomials(const DerivativePolynomials&) = delete;
  DerivativePolynomials& operator=(const DerivativePolynomials&) = delete;

  /// Process-wide instance used by the convenience overloads.
  static DerivativePolynomials& shared();

  const IntPolynomial& get(PolyFamily family, int n);
  /// Tangent triangle reaching at least row min_n.
  std::shared_ptr<const NumberTriangle> tangent_triangle(int min_n);
  std::shared_ptr<const NumberTriangle> secant_triangle(int min_n);

 private:
  void ensure_triangles(int min_n);  // caller holds the exclusive lock

  std::shared_mutex mutex_;
  std::shared_ptr<const NumberTriangle> tangent_;
  std::shared_ptr<const NumberTriangle> secant_;
  std::map<std::pair<PolyFamily, int>, IntPolynomial> polys_;
};

}  // namespace tansec
