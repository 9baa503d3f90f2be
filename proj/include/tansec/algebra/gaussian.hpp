#pragma once

#include <ostream>

#include "tansec/algebra/exact_int.hpp"
#include "tansec/algebra/rational.hpp"

namespace tansec {

/// Complex number re + im·i over an exact ring (ExactInt or Rational).
template <typename T>
struct Gaussian {
  T re{};
  T im{};

  static Gaussian i() { return {T(0), T(1)}; }

  [[nodiscard]] bool is_real() const { return im == T(0); }
  [[nodiscard]] Gaussian conj() const { return {re, -im}; }

  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) {
    T r = re * o.re - im * o.im;
    T m = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
    return os << '(' << g.re << ", " << g.im << "i)";
  }
};

template <typename T>
Gaussian<T> pow(Gaussian<T> base, unsigned long exponent) {
  Gaussian<T> result{T(1), T(0)};
  while (exponent != 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

using GaussianInt = Gaussian<ExactInt>;
using GaussianRational = Gaussian<Rational>;

}  // namespace tansec
