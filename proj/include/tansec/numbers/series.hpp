#pragma once

#include <vector>

#include "tansec/algebra/rational.hpp"

namespace tansec {

/// Truncated Maclaurin series: entry n is the coefficient of t^n.
using SeriesCoefficients = std::vector<Rational>;

enum class SeriesFamily { TanPower, SecTanPower };

namespace series {

SeriesCoefficients sin(int n_max);
SeriesCoefficients cos(int n_max);
/// Product truncated at n_max.
SeriesCoefficients multiply(const SeriesCoefficients& a, const SeriesCoefficients& b, int n_max);
/// Quotient a/b truncated at n_max; b[0] must be nonzero.
SeriesCoefficients divide(const SeriesCoefficients& a, const SeriesCoefficients& b, int n_max);

}  // namespace series

/// Maclaurin coefficients of tan^k(t) (k >= 1) or sec(t) tan^k(t) (k >= 0)
/// through t^n_max, by exact rational series arithmetic. Throws DomainError
/// when the order is out of range or n_max < k.
SeriesCoefficients egf_coefficients(SeriesFamily family, int k, int n_max);

}  // namespace tansec
