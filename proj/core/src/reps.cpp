#include "pvcastle/reps.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace pvcastle {

namespace {

std::size_t checked_size(const Int& v, const char* what) {
  if (mpz_sgn(v.get_mpz_t()) <= 0 || !v.fits_ulong_p())
    throw ValueError(std::string(what) + ": value out of range");
  return static_cast<std::size_t>(v.get_ui());
}

using Exponents = std::vector<std::size_t>;

// Degree-d monomials in n variables, exponent of e_1 decreasing first.
void gen_monomials(std::size_t n, std::size_t d, Exponents& prefix,
                   std::vector<Exponents>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(d);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t e = d + 1; e-- > 0;) {
    prefix.push_back(e);
    gen_monomials(n, d - e, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Exponents> monomial_basis(std::size_t n, std::size_t d) {
  std::vector<Exponents> out;
  Exponents prefix;
  gen_monomials(n, d, prefix, out);
  return out;
}

}  // namespace

std::size_t sym_power_degree(std::size_t d, std::size_t n) {
  // binom(n + d - 1, d)
  std::size_t num = 1, den = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    num *= n - 1 + i;
    den *= i;
  }
  return num / den;
}

Representation gl1_rep() {
  Representation r;
  r.algebra.factors = {FactorSpec::gl1()};
  r.degree = 1;
  RationalMatrix one(1, 1);
  one.set(0, 0, 1);
  r.matrices.push_back(std::move(one));
  return r;
}

Representation identity_rep(std::size_t n) {
  if (n < 1) throw ValueError("identity_rep: n must be positive");
  Representation r;
  r.algebra.factors = {FactorSpec::sl(n)};
  r.degree = n;
  r.matrices = basis(FactorSpec::sl(n));
  return r;
}

Representation dual_rep(const Representation& r) {
  Representation d;
  d.algebra = r.algebra;
  d.degree = r.degree;
  d.matrices.reserve(r.matrices.size());
  for (const RationalMatrix& m : r.matrices)
    d.matrices.push_back(m.transposed().negated());
  return d;
}

RationalMatrix sym_power_action(std::size_t d, const RationalMatrix& x) {
  if (!x.is_square()) throw DimensionMismatch("sym_power_action: square input");
  const std::size_t n = x.rows();
  const std::vector<Exponents> mons = monomial_basis(n, d);
  std::map<Exponents, std::size_t> index;
  for (std::size_t c = 0; c < mons.size(); ++c) index[mons[c]] = c;

  RationalMatrix out(mons.size(), mons.size());
  for (std::size_t c = 0; c < mons.size(); ++c) {
    const Exponents& alpha = mons[c];
    // Derivation: X . x^alpha = sum_i alpha_i x^(alpha - e_i) (X . e_i).
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Rat& xji = x.at(j, i);
        if (is_zero(xji)) continue;
        Exponents beta = alpha;
        --beta[i];
        ++beta[j];
        const std::size_t row = index.at(beta);
        out.set(row, c, out.at(row, c) + Rat(static_cast<long>(alpha[i])) * xji);
      }
    }
  }
  return out;
}

Representation sym_power(std::size_t d, std::size_t n) {
  if (d < 1 || n < 2) throw ValueError("sym_power: need d >= 1 and n >= 2");
  Representation r;
  r.algebra.factors = {FactorSpec::sl(n)};
  r.degree = sym_power_degree(d, n);
  for (const RationalMatrix& b : basis(FactorSpec::sl(n)))
    r.matrices.push_back(sym_power_action(d, b));
  return r;
}

RationalMatrix ext_square_action(const RationalMatrix& x) {
  if (!x.is_square()) throw DimensionMismatch("ext_square_action: square input");
  const std::size_t n = x.rows();
  auto pair_index = [n](std::size_t i, std::size_t j) {
    // (i, j) with i < j, lexicographic
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  const std::size_t deg = n * (n - 1) / 2;
  RationalMatrix out(deg, deg);
  auto add = [&](std::size_t p, std::size_t q, std::size_t col, const Rat& v) {
    if (p == q) return;
    if (p < q)
      out.set(pair_index(p, q), col, out.at(pair_index(p, q), col) + v);
    else
      out.set(pair_index(q, p), col, out.at(pair_index(q, p), col) - v);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t col = pair_index(a, b);
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(x.at(j, a))) add(j, b, col, x.at(j, a));
        if (!is_zero(x.at(j, b))) add(a, j, col, x.at(j, b));
      }
    }
  return out;
}

Representation ext_square(std::size_t n) {
  if (n < 2) throw ValueError("ext_square: need n >= 2");
  Representation r;
  r.algebra.factors = {FactorSpec::sl(n)};
  r.degree = n * (n - 1) / 2;
  for (const RationalMatrix& b : basis(FactorSpec::sl(n)))
    r.matrices.push_back(ext_square_action(b));
  return r;
}

namespace {

Representation tensor_pair(const Representation& a, const Representation& b) {
  Representation r;
  r.algebra.factors = a.algebra.factors;
  r.algebra.factors.insert(r.algebra.factors.end(), b.algebra.factors.begin(),
                           b.algebra.factors.end());
  r.degree = a.degree * b.degree;
  r.matrices.reserve(a.matrices.size() + b.matrices.size());
  const RationalMatrix zero_a(a.degree, a.degree);
  const RationalMatrix zero_b(b.degree, b.degree);
  for (const RationalMatrix& m : a.matrices)
    r.matrices.push_back(kronecker_sum(m, zero_b));
  for (const RationalMatrix& n : b.matrices)
    r.matrices.push_back(kronecker_sum(zero_a, n));
  return r;
}

}  // namespace

Representation general_tensor(const std::vector<Representation>& reps) {
  if (reps.empty()) throw ValueError("general_tensor: empty factor list");
  Representation acc = reps.front();
  for (std::size_t t = 1; t < reps.size(); ++t) acc = tensor_pair(acc, reps[t]);
  return acc;
}

Triplet tensor_triplet(const Solution& sol) {
  if (!(sol.a == 2 || sol.a == 3 || sol.a == 5))
    throw UnsupportedA("tensor_triplet: a must be 2, 3 or 5");
  const long a = sol.a.get_si();

  std::vector<Representation> slots;
  std::vector<RepKind> kinds;
  slots.push_back(gl1_rep());
  kinds.push_back(RepKind::L1);
  if (a == 2) {
    slots.push_back(sym_power(3, 2));
    kinds.push_back(RepKind::Sym3);
  } else if (a == 3) {
    slots.push_back(sym_power(2, 3));
    kinds.push_back(RepKind::Sym2);
  } else {
    slots.push_back(ext_square(5));
    kinds.push_back(RepKind::Ext2);
  }
  for (const Int& m : sol.parts) {
    if (m == 1) continue;  // sl(1) = 0: trivial slot, elided from the algebra
    slots.push_back(identity_rep(checked_size(m, "tensor_triplet part")));
    kinds.push_back(RepKind::L1);
  }
  return Triplet{general_tensor(slots), std::move(kinds)};
}

namespace {

struct SparseEntry {
  std::uint32_t row;
  std::uint32_t col;
  const Rat* value;
};

struct SparseView {
  std::vector<SparseEntry> entries;
  std::vector<std::vector<std::pair<std::uint32_t, const Rat*>>> rows;
};

SparseView sparse_view(const RationalMatrix& m) {
  SparseView v;
  v.rows.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& e = m.at(i, j);
      if (is_zero(e)) continue;
      v.entries.push_back({static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j), &e});
      v.rows[i].emplace_back(static_cast<std::uint32_t>(j), &e);
    }
  return v;
}

// Dense accumulator that remembers which cells were touched, so resets and
// comparisons stay proportional to the number of nonzeros.
struct Scratch {
  explicit Scratch(std::size_t n) : cells(n) {}
  std::vector<Rat> cells;
  std::vector<std::size_t> touched;

  void add(std::size_t idx, const Rat& v) {
    if (is_zero(cells[idx])) touched.push_back(idx);
    cells[idx] += v;
  }
  void reset() {
    for (std::size_t idx : touched) cells[idx] = 0;
    touched.clear();
  }
};

void accumulate_product(const SparseView& a, const SparseView& b,
                        std::size_t cols, bool negate, Scratch& out) {
  Rat term;
  for (const SparseEntry& e : a.entries)
    for (const auto& [j, bval] : b.rows[e.col]) {
      term = (*e.value) * (*bval);
      if (negate) term = -term;
      out.add(static_cast<std::size_t>(e.row) * cols + j, term);
    }
}

}  // namespace

bool homomorphism_property_holds(const Representation& rep) {
  const std::size_t deg = rep.degree;
  const std::size_t total = rep.algebra.dim();
  if (rep.matrices.size() != total) return false;

  std::vector<SparseView> views;
  views.reserve(total);
  for (const RationalMatrix& m : rep.matrices) views.push_back(sparse_view(m));

  // factor index and small-basis matrix per global basis position
  std::vector<std::size_t> factor_of(total), offset_of(total), local_of(total);
  std::vector<std::vector<RationalMatrix>> small_bases;
  {
    std::size_t pos = 0;
    for (std::size_t f = 0; f < rep.algebra.factors.size(); ++f) {
      small_bases.push_back(basis(rep.algebra.factors[f]));
      for (std::size_t l = 0; l < small_bases.back().size(); ++l, ++pos) {
        factor_of[pos] = f;
        offset_of[pos] = pos - l;
        local_of[pos] = l;
      }
    }
  }

  Scratch lhs(deg * deg), rhs(deg * deg);
  for (std::size_t s = 0; s < total; ++s) {
    for (std::size_t t = s + 1; t < total; ++t) {
      lhs.reset();
      rhs.reset();
      accumulate_product(views[s], views[t], deg, false, lhs);
      accumulate_product(views[t], views[s], deg, true, lhs);
      if (factor_of[s] == factor_of[t]) {
        const std::size_t f = factor_of[s];
        const RationalMatrix small = commutator(small_bases[f][local_of[s]],
                                                small_bases[f][local_of[t]]);
        const std::vector<Rat> coeffs =
            expand_in_basis(rep.algebra.factors[f], small);
        for (std::size_t r = 0; r < coeffs.size(); ++r) {
          if (is_zero(coeffs[r])) continue;
          for (const SparseEntry& e : views[offset_of[s] + r].entries)
            rhs.add(static_cast<std::size_t>(e.row) * deg + e.col,
                    coeffs[r] * (*e.value));
        }
      }
      // rhs is zero for basis elements of different factors
      for (std::size_t idx : lhs.touched)
        if (lhs.cells[idx] != rhs.cells[idx]) return false;
      for (std::size_t idx : rhs.touched)
        if (lhs.cells[idx] != rhs.cells[idx]) return false;
    }
  }
  return true;
}

}  // namespace pvcastle
