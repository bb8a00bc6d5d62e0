#include "pvcastle/modular.hpp"

#include <array>

#include "pvcastle/errors.hpp"
#include "pvcastle/rational.hpp"

namespace pvcastle {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // p prime, a != 0 mod p
  return powmod(a, p - 2, p);
}

std::uint64_t reduce_int(const Int& z, std::uint64_t p) {
  Int r, m(static_cast<unsigned long>(p));
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());  // non-negative
  return mpz_get_ui(r.get_mpz_t());
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit inputs.
  constexpr std::array<std::uint64_t, 12> witnesses{2,  3,  5,  7,  11, 13,
                                                    17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : witnesses) {
    std::uint64_t x = powmod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n >= (std::uint64_t{1} << 63))
    throw Error("next_prime: argument too large");
  std::uint64_t c = n + 1;
  if (c <= 2) return 2;
  if ((c & 1) == 0) ++c;
  while (!is_prime_u64(c)) c += 2;
  return c;
}

ModularMatrix::ModularMatrix(std::size_t rows, std::size_t cols,
                             std::uint64_t prime)
    : rows_(rows), cols_(cols), prime_(prime), entries_(rows * cols, 0) {
  if (!is_prime_u64(prime)) throw ValueError("modulus is not prime");
}

void ModularMatrix::set(std::size_t i, std::size_t j, std::uint64_t value) {
  entries_[i * cols_ + j] = value % prime_;
}

ModularMatrix ModularMatrix::reduce(const RationalMatrix& m,
                                    std::uint64_t prime) {
  ModularMatrix out(m.rows(), m.cols(), prime);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& e = m.at(i, j);
      if (is_zero(e)) continue;
      std::uint64_t den = reduce_int(Int(e.get_den()), prime);
      if (den == 0)
        throw DenominatorDivisibleByPrime(
            "entry denominator divisible by the chosen prime");
      std::uint64_t num = reduce_int(Int(e.get_num()), prime);
      out.entries_[i * m.cols() + j] = mulmod(num, invmod(den, prime), prime);
    }
  return out;
}

std::size_t ModularMatrix::rank() const {
  std::vector<std::uint64_t> a = entries_;
  const std::uint64_t p = prime_;
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& {
    return a[i * cols_ + j];
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
    std::uint64_t inv = invmod(at(rank, col), p);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (at(i, col) == 0) continue;
      std::uint64_t factor = mulmod(at(i, col), inv, p);
      for (std::size_t j = col; j < cols_; ++j) {
        std::uint64_t sub = mulmod(factor, at(rank, j), p);
        at(i, j) = (at(i, j) + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace pvcastle
