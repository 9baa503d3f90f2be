#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tansec/algebra/int_polynomial.hpp"
#include "tansec/polys/derivative_polynomials.hpp"

namespace tansec::verify {

struct CaseResult {
  std::string key;  // "<suite>/<case>"
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CaseResult> cases;  // sorted by key

  [[nodiscard]] bool passed() const;
};

/// golden, dual, egf, classical, divisibility, symmetry, transport, adamchik, oracle, zeta
std::vector<std::string_view> suite_names();

/// Runs one named suite, or every suite for "all". `max_n` bounds the index
/// range; suites with their own natural ceiling (egf 30, adamchik 40,
/// oracle 20) use the smaller of the two. Throws std::invalid_argument for
/// unknown suite names.
SuiteReport run_suite(std::string_view suite, int max_n);

/// The fourteen trigonometric and fourteen hyperbolic polynomials for
/// n = 0..6 as printed in the usual reference table.
struct GoldenPolynomial {
  PolyFamily family;
  int n;
  IntPolynomial poly;
};
std::vector<GoldenPolynomial> golden_table();

}  // namespace tansec::verify
