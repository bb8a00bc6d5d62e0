#include "pvcastle/rational_matrix.hpp"

#include <cassert>
#include <utility>

#include "pvcastle/modular.hpp"

namespace pvcastle {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const Rat& e : entries_)
    if (!pvcastle::is_zero(e)) return false;
  return true;
}

Rat RationalMatrix::trace() const {
  assert(is_square());
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.entries_[j * rows_ + i] = at(i, j);
  return r;
}

RationalMatrix RationalMatrix::negated() const {
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rat& c) const {
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    r.entries_[i] = entries_[i] * c;
    r.entries_[i].canonicalize();
  }
  return r;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
  a += b;
  return a;
}

RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
  a -= b;
  return a;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  assert(a.cols() == b.rows());
  RationalMatrix r(a.rows(), b.cols());
  Rat prod;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (is_zero(bkj)) continue;
        prod = aik * bkj;
        prod += r.at(i, j);
        r.set(i, j, prod);
      }
    }
  }
  return r;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

std::vector<Rat> mat_vec(const RationalMatrix& m, const std::vector<Rat>& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("mat_vec: size mismatch");
  std::vector<Rat> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& e = m.at(i, j);
      if (is_zero(e) || is_zero(v[j])) continue;
      acc += e * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

namespace {

// Clears denominators row by row (rank is invariant under scaling a row by a
// nonzero rational) and returns an integer working copy.
std::vector<Int> integer_rows(const RationalMatrix& m) {
  std::vector<Int> a(m.rows() * m.cols());
  Int lcm, den;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      den = m.at(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& e = m.at(i, j);
      Int scale = lcm / e.get_den();
      a[i * m.cols() + j] = e.get_num() * scale;
    }
  }
  return a;
}

Int exact_div(const Int& num, const Int& den) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  assert(is_zero(r) && "Bareiss division must be exact");
  return q;
}

}  // namespace

std::size_t rank_exact(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<Int> a = integer_rows(m);
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * cols + j]; };

  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(at(pivot, col))) ++pivot;
    if (pivot == rows) continue;  // singular column, move on
    if (pivot != rank)
      for (std::size_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));

    const Int& p = at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        at(i, j) = exact_div(p * at(i, j) - at(i, col) * at(rank, j), prev);
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_modular(const RationalMatrix& m, std::uint64_t prime) {
  return ModularMatrix::reduce(m, prime).rank();
}

std::size_t kernel_dim(const RationalMatrix& m) { return m.cols() - rank_exact(m); }

RationalMatrix kronecker_sum(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.is_square() || !b.is_square())
    throw DimensionMismatch("kronecker_sum: factors must be square");
  const std::size_t n = a.rows(), m = b.rows();
  RationalMatrix r(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t ip = 0; ip < n; ++ip) {
      const Rat& e = a.at(i, ip);
      if (is_zero(e)) continue;
      for (std::size_t j = 0; j < m; ++j) r.set(i * m + j, ip * m + j, e);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t jp = 0; jp < m; ++jp) {
        const Rat& e = b.at(j, jp);
        if (is_zero(e)) continue;
        r.set(i * m + j, i * m + jp, r.at(i * m + j, i * m + jp) + e);
      }
  return r;
}

}  // namespace pvcastle
