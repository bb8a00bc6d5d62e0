#pragma once

#include <cstddef>
#include <vector>

#include "pvcastle/errors.hpp"
#include "pvcastle/rational.hpp"

namespace pvcastle {

/// A tuple (a; m_1, ..., m_k), a node of the castling tree. Parts are kept
/// sorted ascending; equality is multiset equality plus equal a. Parts equal
/// to 1 are retained (sl(1) factors are elided only when building algebras).
struct Solution {
  Int a;
  std::vector<Int> parts;

  Solution() = default;
  Solution(Int a, std::vector<Int> parts);

  std::size_t k() const { return parts.size(); }
  bool operator==(const Solution&) const = default;
};

/// Strict weak order: by a, then k, then lexicographic on parts. Used for
/// canonical output order and visited sets.
bool solution_less(const Solution& lhs, const Solution& rhs);

struct SolutionLess {
  bool operator()(const Solution& lhs, const Solution& rhs) const {
    return solution_less(lhs, rhs);
  }
};

/// a^2 + m_1^2 + ... + m_k^2 - k - 2a m_1 ... m_k, exactly.
Int residual(const Solution& s);

/// sc-transformation at `position` (1-based, referring to the sorted order).
/// position <= k replaces m_i by 2a * prod_{j != i} m_j - m_i; position k+1
/// appends 2a * prod m_j - 1. Result is re-canonicalized. Throws
/// PositionOutOfRange or NonPositiveResult (the latter only on non-solutions).
Solution sc_transform(const Solution& s, std::size_t position);

/// One forward move of a descent path: either sc_transform at `position`, or
/// appending a part equal to 1 (an sl(1) summand is free to add; dropping
/// a 1 during descent is not an sc-transform, so its inverse is recorded as a
/// distinct move kind).
struct PathStep {
  bool add_one = false;
  std::size_t position = 0;  // meaningful when !add_one

  bool operator==(const PathStep&) const = default;
};

struct Descent {
  Solution base;
  /// Moves that rebuild the input from `base`, in application order.
  std::vector<PathStep> forward_path;
  /// Number of sc-transform steps in the path (the "path length").
  std::size_t sc_steps = 0;
};

/// Lemma-driven descent to the reduced base (a; a-1): repeatedly drop parts
/// equal to 1 and sc-transform at the largest position; a terminal (a; a+1)
/// is reduced once more. Throws NotASolution if residual != 0 and
/// UnsupportedA if a is not 2, 3 or 5.
Descent descend(const Solution& s);

/// Applies a forward path starting from `base`.
Solution replay(const Solution& base, const std::vector<PathStep>& path);

/// Breadth-first castling-tree expansion from the base (a; a-1), applying all
/// sc-transform positions plus the add-sl(1) move, pruning children with any
/// part > max_part or k > max_k, deduplicating by canonical form. Every
/// returned solution has residual 0; output is in canonical order.
std::vector<Solution> enumerate_solutions(const Int& a, const Int& max_part,
                                          std::size_t max_k);

/// True iff no part equals 1.
bool is_essential(const Solution& s);

/// For a = 3 removes solutions containing a part equal to 2 (swapping such a
/// part with the 3 reproduces an a = 2 solution); identity for a = 2 and 5.
std::vector<Solution> repetition_filter(std::vector<Solution> solutions,
                                        const Int& a);

}  // namespace pvcastle
