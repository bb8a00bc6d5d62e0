#pragma once

#include <cstddef>
#include <vector>

#include "pvcastle/rational_matrix.hpp"

namespace pvcastle {

enum class FactorKind { GL1, SL };

/// One direct summand: gl(1) or sl(n). sl(1) is the zero algebra.
struct FactorSpec {
  FactorKind kind = FactorKind::GL1;
  std::size_t n = 1;  // meaningful for SL; GL1 is always 1-dimensional

  static FactorSpec gl1() { return {FactorKind::GL1, 1}; }
  static FactorSpec sl(std::size_t n) { return {FactorKind::SL, n}; }

  std::size_t dim() const {
    return kind == FactorKind::GL1 ? 1 : n * n - 1;
  }
  /// Size of the matrices basis() returns (1 for gl(1), n for sl(n)).
  std::size_t matrix_size() const { return kind == FactorKind::GL1 ? 1 : n; }

  bool operator==(const FactorSpec&) const = default;
};

/// Formal direct sum of gl(1) and sl(n) factors, in order.
struct AlgebraSpec {
  std::vector<FactorSpec> factors;

  std::size_t dim() const;
  bool operator==(const AlgebraSpec&) const = default;
};

/// Standard basis of one factor: for gl(1) the scalar [1]; for sl(n) the
/// off-diagonal E_ij in row-major order followed by E_ii - E_{i+1,i+1}.
/// Deterministic order; this fixes orbit-matrix column order everywhere.
std::vector<RationalMatrix> basis(const FactorSpec& factor);

/// Coefficients of `element` in basis(factor). For sl(n) the element must be
/// traceless (throws ValueError otherwise); size must match matrix_size().
std::vector<Rat> expand_in_basis(const FactorSpec& factor,
                                 const RationalMatrix& element);

}  // namespace pvcastle
