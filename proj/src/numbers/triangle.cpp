#include "tansec/numbers/triangle.hpp"

#include <stdexcept>
#include <string>

#include "tansec/errors.hpp"

namespace tansec {

namespace {

const ExactInt kZero{};

void require_max_n(int max_n) {
  if (max_n < 0) throw DomainError("max_n must be nonnegative, got " + std::to_string(max_n));
}

// Builds rows 0..max_n from row 0 = [1] and a rule giving row n+1 entry k
// from row n (which reads as zero outside 0..n).
template <typename Step>
std::vector<std::vector<ExactInt>> build_rows(int max_n, Step step) {
  require_max_n(max_n);
  std::vector<std::vector<ExactInt>> rows;
  rows.reserve(static_cast<std::size_t>(max_n) + 1);
  rows.push_back({ExactInt(1)});
  for (int n = 0; n < max_n; ++n) {
    const auto& prev = rows.back();
    auto get = [&prev](int k) -> const ExactInt& {
      return (k < 0 || k >= static_cast<int>(prev.size())) ? kZero : prev[static_cast<std::size_t>(k)];
    };
    std::vector<ExactInt> next(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n + 1; ++k) next[static_cast<std::size_t>(k)] = step(get, k);
    rows.push_back(std::move(next));
  }
  return rows;
}

}  // namespace

std::string_view to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::TangentOrderK: return "TangentOrderK";
    case TriangleKind::SecantOrderK: return "SecantOrderK";
    case TriangleKind::StirlingSubset: return "StirlingSubset";
  }
  return "unknown";
}

NumberTriangle::NumberTriangle(TriangleKind kind, std::vector<std::vector<ExactInt>> rows)
    : kind_(kind), rows_(std::move(rows)) {
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) throw std::invalid_argument("triangle row " + std::to_string(n) + " has wrong length");
  }
}

const ExactInt& NumberTriangle::at(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return kZero;
  if (n > max_n()) {
    throw std::out_of_range("triangle row " + std::to_string(n) + " not built (max_n = " + std::to_string(max_n()) + ")");
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::span<const ExactInt> NumberTriangle::row(int n) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("triangle row " + std::to_string(n) + " not built");
  return rows_[static_cast<std::size_t>(n)];
}

NumberTriangle build_tangent_triangle(int max_n) {
  return NumberTriangle(TriangleKind::TangentOrderK, build_rows(max_n, [](auto get, int k) {
                          if (k == 0) return ExactInt();
                          ExactInt r = get(k - 1) + get(k + 1);
                          r *= ExactInt(k);
                          return r;
                        }));
}

NumberTriangle build_secant_triangle(int max_n) {
  return NumberTriangle(TriangleKind::SecantOrderK, build_rows(max_n, [](auto get, int k) {
                          return ExactInt(k) * get(k - 1) + ExactInt(k + 1) * get(k + 1);
                        }));
}

NumberTriangle build_stirling_subset_triangle(int max_n) {
  return NumberTriangle(TriangleKind::StirlingSubset, build_rows(max_n, [](auto get, int k) {
                          return ExactInt(k) * get(k) + get(k - 1);
                        }));
}

ClassicalSequences classical_sequences(int max_n) {
  require_max_n(max_n);
  // T(n,1) needs row n of the tangent triangle; S(n,0) likewise.
  const NumberTriangle tangent = build_tangent_triangle(max_n);
  const NumberTriangle secant = build_secant_triangle(max_n);
  ClassicalSequences out;
  for (int n = 0; n <= max_n; ++n) {
    out.tangent.push_back(tangent.at(n, 1));
    out.euler.push_back(secant.at(n, 0));
  }
  return out;
}

}  // namespace tansec
