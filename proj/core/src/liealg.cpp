#include "pvcastle/liealg.hpp"

#include "pvcastle/errors.hpp"

namespace pvcastle {

std::size_t AlgebraSpec::dim() const {
  std::size_t d = 0;
  for (const FactorSpec& f : factors) d += f.dim();
  return d;
}

std::vector<RationalMatrix> basis(const FactorSpec& factor) {
  std::vector<RationalMatrix> out;
  if (factor.kind == FactorKind::GL1) {
    RationalMatrix one(1, 1);
    one.set(0, 0, 1);
    out.push_back(std::move(one));
    return out;
  }
  const std::size_t n = factor.n;
  out.reserve(factor.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RationalMatrix e(n, n);
      e.set(i, j, 1);
      out.push_back(std::move(e));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RationalMatrix h(n, n);
    h.set(i, i, 1);
    h.set(i + 1, i + 1, -1);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Rat> expand_in_basis(const FactorSpec& factor,
                                 const RationalMatrix& element) {
  if (element.rows() != factor.matrix_size() ||
      element.cols() != factor.matrix_size())
    throw DimensionMismatch("expand_in_basis: element size mismatch");
  if (factor.kind == FactorKind::GL1) return {element.at(0, 0)};

  const std::size_t n = factor.n;
  if (!is_zero(element.trace()))
    throw ValueError("expand_in_basis: sl(n) element must be traceless");
  std::vector<Rat> coeffs;
  coeffs.reserve(factor.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) coeffs.push_back(element.at(i, j));
  // Diagonal (d_1, ..., d_n) with sum 0 expands over E_ii - E_{i+1,i+1} with
  // coefficients given by partial sums.
  Rat partial = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    partial += element.at(i, i);
    coeffs.push_back(partial);
  }
  return coeffs;
}

}  // namespace pvcastle
