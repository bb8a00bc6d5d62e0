#pragma once

#include <cstddef>
#include <vector>

#include "pvcastle/errors.hpp"
#include "pvcastle/rational.hpp"

namespace pvcastle {

/// Dense matrix over exact rationals. Entries are kept in lowest terms with
/// positive denominator; immutable use after construction is thread-safe.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Rat value) {
    value.canonicalize();
    entries_[i * cols_ + j] = std::move(value);
  }
  void set(std::size_t i, std::size_t j, long value) {
    entries_[i * cols_ + j] = value;
  }

  bool operator==(const RationalMatrix& other) const = default;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Rat trace() const;
  RationalMatrix transposed() const;
  RationalMatrix negated() const;
  RationalMatrix scaled(const Rat& c) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);

// Skips zero entries of the left factor; representation matrices are sparse
// after tensoring even though storage is dense.
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

std::vector<Rat> mat_vec(const RationalMatrix& m, const std::vector<Rat>& v);

/// Rank over the rationals via fraction-free (Bareiss) elimination.
std::size_t rank_exact(const RationalMatrix& m);

/// Rank of the reduction mod p; always <= rank_exact(m). Throws
/// DenominatorDivisibleByPrime if some denominator reduces to 0 mod p.
std::size_t rank_modular(const RationalMatrix& m, std::uint64_t prime);

/// cols(m) - rank_exact(m).
std::size_t kernel_dim(const RationalMatrix& m);

/// a (+) b = a tensor I + I tensor b for square a (n x n), b (m x m), with the
/// tensor basis e_i tensor e_j ordered row-major (first factor major).
RationalMatrix kronecker_sum(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace pvcastle
