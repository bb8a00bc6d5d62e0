#include "pvcastle/pv.hpp"

#include <random>
#include <utility>

namespace pvcastle {

RationalMatrix orbit_matrix(const Triplet& t, const std::vector<Rat>& v) {
  if (v.size() != t.space_dim())
    throw DimensionMismatch("orbit_matrix: vector length != space dimension");
  const std::size_t cols = t.rep.matrices.size();
  RationalMatrix out(t.space_dim(), cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Rat> col = mat_vec(t.rep.matrices[j], v);
    for (std::size_t i = 0; i < col.size(); ++i) out.set(i, j, std::move(col[i]));
  }
  return out;
}

bool is_generic(const Triplet& t, const std::vector<Rat>& v) {
  return rank_exact(orbit_matrix(t, v)) == t.space_dim();
}

std::size_t isotropy_dim(const Triplet& t, const std::vector<Rat>& v) {
  return kernel_dim(orbit_matrix(t, v));
}

namespace {

std::vector<Rat> sample_vector(std::mt19937_64& rng, std::size_t len,
                               long bound) {
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  std::vector<Rat> v(len);
  for (std::size_t i = 0; i < len; ++i)
    v[i] = static_cast<long>(rng() % span) - bound;
  return v;
}

}  // namespace

GenericityCertificate find_generic(const Triplet& t,
                                   const SearchParams& params) {
  GenericityCertificate cert;
  cert.seed = params.seed;
  cert.prescreen_prime = params.prescreen_prime;
  const std::size_t dim = t.space_dim();

  if (params.coeff_bound < 0)
    throw ValueError("find_generic: coefficient bound must be non-negative");

  std::mt19937_64 rng(params.seed);
  for (std::size_t trial = 1; trial <= params.trials; ++trial) {
    std::vector<Rat> v = sample_vector(rng, dim, params.coeff_bound);
    RationalMatrix orbit = orbit_matrix(t, v);
    bool prescreen_full = false;
    try {
      prescreen_full = rank_modular(orbit, params.prescreen_prime) == dim;
    } catch (const DenominatorDivisibleByPrime&) {
      prescreen_full = true;  // cannot pre-screen; decide exactly below
    }
    if (!prescreen_full) continue;
    if (rank_exact(orbit) == dim) {
      cert.verdict = Verdict::GenericWitnessFound;
      cert.witness = std::move(v);
      cert.orbit_rank = dim;
      cert.isotropy_dim = t.algebra().dim() - dim;
      cert.trials_used = trial;
      return cert;
    }
  }
  cert.verdict = Verdict::NoWitnessFound;
  cert.trials_used = params.trials;
  return cert;
}

PvCheckResult is_pv_type_ifps(const Triplet& t, const SearchParams& params) {
  PvCheckResult res;
  res.dims_match = t.algebra().dim() == t.space_dim();
  res.certificate = find_generic(t, params);
  res.is_pv_type_ifps =
      res.dims_match &&
      res.certificate.verdict == Verdict::GenericWitnessFound;
  return res;
}

PvCheckResult is_pv_type_ifps(const Triplet& t, const Solution& derived_from,
                              const SearchParams& params) {
  Int space = 2 * derived_from.a;
  for (const Int& m : derived_from.parts) space *= m;
  if (space != Int(static_cast<unsigned long>(t.space_dim())))
    throw DimensionMismatch("is_pv_type_ifps: triplet does not match solution");
  return is_pv_type_ifps(t, params);
}

namespace {

// h + gl(k) acting by f x L1 on V(deg f) x V(k); gl(k) enters as sl(k) plus a
// central gl(1) mapped to the identity of the total space.
Triplet castling_side(const Representation& f, std::size_t k) {
  Representation rep = general_tensor({f, identity_rep(k)});
  rep.algebra.factors.push_back(FactorSpec::gl1());
  rep.matrices.push_back(RationalMatrix::identity(rep.degree));
  return Triplet{std::move(rep), {}};
}

// Invertible completion [W | e_{t1} | e_{t2} | ...] of a full-column-rank W.
RationalMatrix complete_basis(const RationalMatrix& w) {
  const std::size_t m = w.rows();
  RationalMatrix p(m, m);
  std::size_t filled = w.cols();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) p.set(i, j, w.at(i, j));
  for (std::size_t t = 0; t < m && filled < m; ++t) {
    p.set(t, filled, 1);
    RationalMatrix head(m, filled + 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j <= filled; ++j) head.set(i, j, p.at(i, j));
    if (rank_exact(head) == filled + 1)
      ++filled;
    else
      p.set(t, filled, 0);
  }
  if (filled != m) throw Error("complete_basis: could not complete");
  return p;
}

// Exact inverse by Gauss-Jordan; pivot row chosen by largest absolute
// numerator for determinism.
RationalMatrix invert(const RationalMatrix& p) {
  const std::size_t m = p.rows();
  RationalMatrix a = p;
  RationalMatrix inv = RationalMatrix::identity(m);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    Int best_num = 0;
    for (std::size_t i = col; i < m; ++i) {
      const Rat& e = a.at(i, col);
      if (is_zero(e)) continue;
      Int num = e.get_num();
      if (mpz_cmpabs(num.get_mpz_t(), best_num.get_mpz_t()) > 0) {
        best_num = num;
        pivot = i;
      }
    }
    if (is_zero(best_num)) throw Error("invert: singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < m; ++j) {
        Rat tmp = a.at(col, j);
        a.set(col, j, a.at(pivot, j));
        a.set(pivot, j, tmp);
        tmp = inv.at(col, j);
        inv.set(col, j, inv.at(pivot, j));
        inv.set(pivot, j, tmp);
      }
    const Rat lead = a.at(col, col);
    for (std::size_t j = 0; j < m; ++j) {
      a.set(col, j, a.at(col, j) / lead);
      inv.set(col, j, inv.at(col, j) / lead);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col) continue;
      const Rat factor = a.at(i, col);
      if (is_zero(factor)) continue;
      for (std::size_t j = 0; j < m; ++j) {
        a.set(i, j, a.at(i, j) - factor * a.at(col, j));
        inv.set(i, j, inv.at(i, j) - factor * inv.at(col, j));
      }
    }
  }
  return inv;
}

}  // namespace

CastlingReport castling_check(const Representation& h_rep, std::size_t n,
                              const SearchParams& params) {
  const std::size_t m = h_rep.degree;
  if (n < 1 || n >= m)
    throw DimensionMismatch("castling_check: need 1 <= n < m");

  CastlingReport report;
  report.m = m;
  report.n = n;
  report.seed = params.seed;

  Triplet side1 = castling_side(h_rep, n);
  report.side1_algebra_dim = side1.algebra().dim();
  report.side1_space_dim = side1.space_dim();
  report.side2_algebra_dim = h_rep.algebra.dim() + (m - n) * (m - n);
  report.side2_space_dim = m * (m - n);

  GenericityCertificate cert = find_generic(side1, params);
  report.trials_used = cert.trials_used;
  if (cert.verdict != Verdict::GenericWitnessFound) return report;
  report.side1_generic = true;
  report.side1_isotropy_dim = cert.isotropy_dim;
  report.witness1 = cert.witness;

  // Change basis so the witness becomes (e_1, ..., e_n).
  RationalMatrix w(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w.set(i, j, cert.witness[i * n + j]);
  const RationalMatrix p = complete_basis(w);
  const RationalMatrix p_inv = invert(p);

  Representation conj;
  conj.algebra = h_rep.algebra;
  conj.degree = m;
  conj.matrices.reserve(h_rep.matrices.size());
  for (const RationalMatrix& mat : h_rep.matrices)
    conj.matrices.push_back(p_inv * mat * p);

  // Diagnostic from the proof: both isotropy algebras are identified with
  // {H in h : lower-left (m-n) x n block of f(H) = 0}.
  {
    RationalMatrix block_map((m - n) * n, conj.matrices.size());
    for (std::size_t t = 0; t < conj.matrices.size(); ++t)
      for (std::size_t i = 0; i < m - n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          block_map.set(i * n + j, t, conj.matrices[t].at(n + i, j));
    report.h_block_kernel_dim = kernel_dim(block_map);
  }

  Triplet side2 = castling_side(dual_rep(conj), m - n);
  std::vector<Rat> wperp(m * (m - n));
  for (std::size_t j = 0; j < m - n; ++j) wperp[(n + j) * (m - n) + j] = 1;

  RationalMatrix orbit2 = orbit_matrix(side2, wperp);
  report.side2_generic = rank_exact(orbit2) == side2.space_dim();
  report.side2_isotropy_dim = kernel_dim(orbit2);
  report.witness2 = std::move(wperp);
  return report;
}

}  // namespace pvcastle
