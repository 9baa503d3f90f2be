#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <string_view>

#include "tansec/algebra/int_polynomial.hpp"
#include "tansec/calculus/derivatives.hpp"
#include "tansec/numbers/triangle.hpp"
#include "tansec/polys/derivative_polynomials.hpp"
#include "tansec/zeta/hurwitz.hpp"

namespace tansec::io {

/// Insertion-ordered JSON so field order is stable across runs.
using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json, Csv, Latex };

std::string_view to_string(OutputFormat format);
/// Throws std::invalid_argument for unknown names.
OutputFormat parse_output_format(std::string_view text);

/// {"kind", "max_n", "rows": [[decimal strings]]}
Json triangle_to_json(const NumberTriangle& triangle);
/// "n,k,value" header, one line per nonzero entry.
std::string triangle_to_csv(const NumberTriangle& triangle);
std::string triangle_to_text(const NumberTriangle& triangle);

/// {"family", "n", "coefficients": [decimal strings, ascending powers]}
Json polynomial_to_json(PolyFamily family, int n, const IntPolynomial& p);
/// "family,n,k,coefficient" rows for nonzero coefficients; header only when requested.
std::string polynomial_to_csv(PolyFamily family, int n, const IntPolynomial& p, bool header = true);
/// Descending powers with explicit signs, e.g. "24 x^4 - 28 x^2 + 5".
std::string polynomial_to_latex(const IntPolynomial& p);
/// Inverse of polynomial_to_latex. Throws std::invalid_argument on malformed input.
IntPolynomial parse_latex_polynomial(std::string_view text);

/// Decimal digits needed to print a value computed at `precision` bits.
int decimal_digits(Precision precision);

}  // namespace tansec::io
