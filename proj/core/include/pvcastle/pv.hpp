#pragma once

#include <cstdint>
#include <vector>

#include "pvcastle/castle.hpp"
#include "pvcastle/modular.hpp"
#include "pvcastle/reps.hpp"

namespace pvcastle {

struct SearchParams {
  std::size_t trials = 32;
  long coeff_bound = 5;
  std::uint64_t seed = 0;
  std::uint64_t prescreen_prime = kDefaultPrime;
};

enum class Verdict { GenericWitnessFound, NoWitnessFound };

struct GenericityCertificate {
  Verdict verdict = Verdict::NoWitnessFound;
  std::vector<Rat> witness;  // filled when a witness was found
  std::size_t orbit_rank = 0;
  std::size_t isotropy_dim = 0;
  std::size_t trials_used = 0;
  std::uint64_t prescreen_prime = kDefaultPrime;
  std::uint64_t seed = 0;
};

/// space_dim x dim(algebra) matrix whose column j is matrix(X_j) * v.
RationalMatrix orbit_matrix(const Triplet& t, const std::vector<Rat>& v);

/// True iff the orbit map at v has full rank space_dim (exact).
bool is_generic(const Triplet& t, const std::vector<Rat>& v);

/// dim of the isotropy subalgebra at v: kernel_dim(orbit_matrix(t, v)).
std::size_t isotropy_dim(const Triplet& t, const std::vector<Rat>& v);

/// Random search for a generic point: integer vectors with entries in
/// [-coeff_bound, coeff_bound], modular rank as pre-filter, exact rank
/// confirming every accepted witness. Failure is a verdict, not an error.
GenericityCertificate find_generic(const Triplet& t,
                                   const SearchParams& params = {});

struct PvCheckResult {
  bool is_pv_type_ifps = false;
  bool dims_match = false;
  GenericityCertificate certificate;
};

/// True iff dim(algebra) == space_dim and a generic witness is found; the
/// certificate is attached either way.
PvCheckResult is_pv_type_ifps(const Triplet& t, const SearchParams& params = {});
PvCheckResult is_pv_type_ifps(const Triplet& t, const Solution& derived_from,
                              const SearchParams& params = {});

/// Report of the castling-proposition cross-check. Side (1) is
/// (h + gl(n), f x L1, V(m) x V(n)); side (2) is the c-transform
/// (h + gl(m-n), f* x L1, V(m)* x V(m-n)) with the witness w-perp built from
/// a generic w of side (1) moved into standard position.
struct CastlingReport {
  std::size_t m = 0;
  std::size_t n = 0;
  bool side1_generic = false;
  bool side2_generic = false;
  std::size_t side1_algebra_dim = 0;
  std::size_t side2_algebra_dim = 0;
  std::size_t side1_space_dim = 0;
  std::size_t side2_space_dim = 0;
  std::size_t side1_isotropy_dim = 0;
  std::size_t side2_isotropy_dim = 0;
  /// Diagnostic from the proof: dim{H in h : lower-left (m-n) x n block of
  /// f(H) vanishes in the standard position}; equals both isotropy dims when
  /// both sides are generic.
  std::size_t h_block_kernel_dim = 0;
  std::vector<Rat> witness1;
  std::vector<Rat> witness2;
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;
};

/// Builds both sides of the c-transformation for f on V(m) and 1 <= n < m,
/// finds a generic w for side (1), constructs w-perp and checks side (2) at
/// it. side1_generic == false means the search budget was exhausted (the
/// caller decides how to surface that). Throws DimensionMismatch unless
/// 1 <= n < m.
CastlingReport castling_check(const Representation& h_rep, std::size_t n,
                              const SearchParams& params = {});

}  // namespace pvcastle
