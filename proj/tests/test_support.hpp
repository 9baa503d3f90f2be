#pragma once

// Small generators and oracles shared by the unit tests. Nothing here calls
// into the code paths it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "tansec/algebra/exact_int.hpp"
#include "tansec/algebra/int_polynomial.hpp"
#include "tansec/algebra/rational.hpp"

namespace tansec::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x7A45EC5EEDULL);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline ExactInt random_int(int max_digits) {
  ExactInt v(0);
  const int digits = static_cast<int>(uniform(1, max_digits));
  for (int i = 0; i < digits; ++i) v = v * ExactInt(10) + ExactInt(uniform(0, 9));
  return uniform(0, 1) == 0 ? v : -v;
}

inline Rational random_rational(int max_digits) {
  ExactInt den = random_int(max_digits).abs();
  if (den.is_zero()) den = ExactInt(1);
  return Rational(random_int(max_digits), den);
}

inline IntPolynomial random_polynomial(int max_degree, int max_digits) {
  std::vector<ExactInt> c(static_cast<std::size_t>(uniform(0, max_degree)) + 1);
  for (auto& v : c) v = random_int(max_digits);
  return IntPolynomial(std::move(c));
}

/// Sum of c_k x^k with each power computed separately.
inline Rational termwise_value(const IntPolynomial& p, const Rational& x) {
  Rational sum;
  auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) sum += Rational(c[k]) * Rational::pow(x, static_cast<long>(k));
  return sum;
}

/// Counts set partitions of {0..n-1} into exactly k blocks by enumerating
/// restricted growth strings.
inline std::int64_t count_partitions(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::int64_t count = 0;
  while (true) {
    int blocks = 0;
    for (int v : a) blocks = std::max(blocks, v + 1);
    if (blocks == k) ++count;
    // next restricted growth string: a[i] <= 1 + max(a[0..i-1])
    int i = n - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[static_cast<std::size_t>(j)]);
      if (a[static_cast<std::size_t>(i)] <= prefix_max) break;
      --i;
    }
    if (i == 0) return count;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) a[static_cast<std::size_t>(j)] = 0;
  }
}

}  // namespace tansec::testing
