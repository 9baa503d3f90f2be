#include "tansec/numbers/series.hpp"

#include <string>

#include "tansec/errors.hpp"

namespace tansec::series {

namespace {

SeriesCoefficients alternating_factorial_series(int n_max, int parity) {
  SeriesCoefficients out(static_cast<std::size_t>(n_max) + 1);
  ExactInt fact(1);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= ExactInt(n);
    if (n % 2 != parity) continue;
    const ExactInt sign = ((n / 2) % 2 == 0) ? ExactInt(1) : ExactInt(-1);
    out[static_cast<std::size_t>(n)] = Rational(sign, fact);
  }
  return out;
}

const Rational& at(const SeriesCoefficients& s, int n) {
  static const Rational zero;
  return n < static_cast<int>(s.size()) ? s[static_cast<std::size_t>(n)] : zero;
}

}  // namespace

SeriesCoefficients sin(int n_max) { return alternating_factorial_series(n_max, 1); }
SeriesCoefficients cos(int n_max) { return alternating_factorial_series(n_max, 0); }

SeriesCoefficients multiply(const SeriesCoefficients& a, const SeriesCoefficients& b, int n_max) {
  SeriesCoefficients out(static_cast<std::size_t>(n_max) + 1);
  for (int i = 0; i <= n_max && i < static_cast<int>(a.size()); ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= n_max && j < static_cast<int>(b.size()); ++j) {
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

SeriesCoefficients divide(const SeriesCoefficients& a, const SeriesCoefficients& b, int n_max) {
  if (b.empty() || b[0].is_zero()) throw DomainError("series division by a series with zero constant term");
  SeriesCoefficients q(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rational acc = at(a, n);
    for (int j = 1; j <= n; ++j) acc -= at(b, j) * q[static_cast<std::size_t>(n - j)];
    q[static_cast<std::size_t>(n)] = acc / b[0];
  }
  return q;
}

}  // namespace tansec::series

namespace tansec {

SeriesCoefficients egf_coefficients(SeriesFamily family, int k, int n_max) {
  const int min_k = family == SeriesFamily::TanPower ? 1 : 0;
  if (k < min_k) throw DomainError("series order k = " + std::to_string(k) + " out of range");
  if (n_max < k) throw DomainError("n_max must be at least k");

  const SeriesCoefficients c = series::cos(n_max);
  const SeriesCoefficients tan = series::divide(series::sin(n_max), c, n_max);

  SeriesCoefficients acc = family == SeriesFamily::TanPower ? tan : series::divide({Rational(1)}, c, n_max);
  for (int i = 1; i < k; ++i) acc = series::multiply(acc, tan, n_max);
  if (family == SeriesFamily::SecTanPower && k > 0) acc = series::multiply(acc, tan, n_max);
  return acc;
}

}  // namespace tansec
