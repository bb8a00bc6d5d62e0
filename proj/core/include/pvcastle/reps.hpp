#pragma once

#include <cstddef>
#include <vector>

#include "pvcastle/castle.hpp"
#include "pvcastle/liealg.hpp"
#include "pvcastle/rational_matrix.hpp"

namespace pvcastle {

/// The representation constructors the classification needs, as written in
/// the triplet DSL: L1, L1*, 2L1, 3L1, L2.
enum class RepKind { L1, L1Dual, Sym2, Sym3, Ext2 };

/// A representation of an AlgebraSpec on V(degree): one degree x degree
/// matrix per algebra basis element, in basis order (factors in order, each
/// factor's basis in its own order).
struct Representation {
  AlgebraSpec algebra;
  std::size_t degree = 0;
  std::vector<RationalMatrix> matrices;
};

/// (algebra, representation, space) with per-factor constructor tags kept for
/// rendering. rep_kinds is empty for internally built triplets that have no
/// DSL form (castling sides).
struct Triplet {
  Representation rep;
  std::vector<RepKind> rep_kinds;

  const AlgebraSpec& algebra() const { return rep.algebra; }
  std::size_t space_dim() const { return rep.degree; }
};

/// Identity representation of sl(n) on V(n); empty on V(1) for n = 1.
Representation identity_rep(std::size_t n);

/// Dual representation: X -> -X^t, same algebra and degree.
Representation dual_rep(const Representation& r);

/// Image of an arbitrary n x n matrix under the degree-d symmetric power
/// (action by derivation on degree-d monomials; basis ordered with the
/// exponent of e_1 decreasing first).
RationalMatrix sym_power_action(std::size_t d, const RationalMatrix& x);

/// d-th symmetric power of the identity representation of sl(n), n >= 2,
/// on V(binom(n+d-1, d)).
Representation sym_power(std::size_t d, std::size_t n);

/// Image of an arbitrary n x n matrix on the second exterior power, basis
/// {e_i ^ e_j : i < j} in lexicographic order.
RationalMatrix ext_square_action(const RationalMatrix& x);

/// Second exterior power of the identity representation of sl(n), n >= 2,
/// on V(n(n-1)/2).
Representation ext_square(std::size_t n);

/// Representation of the direct-sum algebra on the tensor product space,
/// earlier factors major, built by iterated Kronecker sums.
Representation general_tensor(const std::vector<Representation>& reps);

/// The 1 x 1 representation of gl(1); under general_tensor its basis element
/// becomes the identity on the total space.
Representation gl1_rep();

/// Builds gl(1) + sl(a) + sl(m_1) + ... + sl(m_k) acting by
/// L1 # Lambda # L1 # ... # L1 on V(2a) tensor V(m_1) tensor ... with
/// Lambda = 3L1 (a=2), 2L1 (a=3), L2 (a=5). Parts equal to 1 contribute a
/// trivial slot and are elided from the algebra. Throws UnsupportedA for
/// a not in {2,3,5}.
Triplet tensor_triplet(const Solution& sol);

/// Exhaustive check of matrix([X,Y]) = [matrix(X), matrix(Y)] over all basis
/// pairs, using sparse-aware multiplication.
bool homomorphism_property_holds(const Representation& rep);

std::size_t sym_power_degree(std::size_t d, std::size_t n);

}  // namespace pvcastle
