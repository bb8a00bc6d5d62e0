#pragma once

#include <cstdint>
#include <vector>

#include "pvcastle/rational_matrix.hpp"

namespace pvcastle {

// 2^61 - 1, a Mersenne prime; used as the default pre-screen modulus.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Smallest prime strictly greater than n. Throws Error past 2^63.
std::uint64_t next_prime(std::uint64_t n);

/// Dense matrix over Z/p for a fixed prime p >= 2. Used as a probabilistic
/// rank oracle; the exact path never depends on it.
class ModularMatrix {
 public:
  ModularMatrix(std::size_t rows, std::size_t cols, std::uint64_t prime);

  /// Entrywise reduction num * den^{-1} mod p. Throws ValueError if p is not
  /// prime and DenominatorDivisibleByPrime if a denominator vanishes mod p.
  static ModularMatrix reduce(const RationalMatrix& m, std::uint64_t prime);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t prime() const { return prime_; }

  std::uint64_t at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, std::uint64_t value);

  /// Rank by Gaussian elimination over Z/p. Destroys no state (works on a copy).
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t prime_ = 0;
  std::vector<std::uint64_t> entries_;
};

}  // namespace pvcastle
