#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "tansec/algebra/exact_int.hpp"

namespace tansec {

enum class TriangleKind { TangentOrderK, SecantOrderK, StirlingSubset };

std::string_view to_string(TriangleKind kind);

/// Immutable ragged table of exact integers; row n holds entries k = 0..n.
///
/// Queries with k < 0 or k > n return zero. Rows beyond max_n were never
/// built and throw std::out_of_range.
class NumberTriangle {
 public:
  NumberTriangle(TriangleKind kind, std::vector<std::vector<ExactInt>> rows);

  [[nodiscard]] TriangleKind kind() const { return kind_; }
  [[nodiscard]] int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  [[nodiscard]] const ExactInt& at(int n, int k) const;
  [[nodiscard]] std::span<const ExactInt> row(int n) const;

 private:
  TriangleKind kind_;
  std::vector<std::vector<ExactInt>> rows_;
};

/// T(n,k), tan^k(t) = sum_n T(n,k) t^n/n!, built from
/// T(n+1,k) = k (T(n,k-1) + T(n,k+1)) with T(0,0) = 1.
NumberTriangle build_tangent_triangle(int max_n);

/// S(n,k), sec(t) tan^k(t) = sum_n S(n,k) t^n/n!, built from
/// S(n+1,k) = k S(n,k-1) + (k+1) S(n,k+1) with S(0,0) = 1.
NumberTriangle build_secant_triangle(int max_n);

/// Stirling numbers of the second kind {n,k}.
NumberTriangle build_stirling_subset_triangle(int max_n);

/// The k = 1 tangent column and the k = 0 secant column, indexed by n.
struct ClassicalSequences {
  std::vector<ExactInt> tangent;  // T(n,1)
  std::vector<ExactInt> euler;    // S(n,0)
};

ClassicalSequences classical_sequences(int max_n);

}  // namespace tansec
