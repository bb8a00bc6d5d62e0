#pragma once

#include <string>
#include <string_view>

#include "pvcastle/castle.hpp"
#include "pvcastle/reps.hpp"

namespace pvcastle {

/// Parses "(a; m1, m2, ...)" with arbitrary whitespace and arbitrary-precision
/// integers. Throws ParseError (with span) on bad syntax, ValueError if a < 2
/// or a part is < 1.
Solution parse_solution(std::string_view text);

/// Parses "FACTOR(+FACTOR)* : REP(#REP)*" where FACTOR is gl(1) or sl(n) and
/// REP is one of L1, L1*, 2L1, 3L1, L2. Factor and rep counts must agree
/// (ArityMismatch); incompatible pairs such as L2 on gl(1) or 2L1 on sl(1)
/// raise UnsupportedRep.
Triplet parse_triplet(std::string_view text);

/// Canonical, round-trippable text: "(2; 3, 11)".
std::string render(const Solution& s);

/// Canonical, round-trippable text: "gl(1)+sl(3)+sl(2) : L1#2L1#L1".
/// Requires rep_kinds (triplets built by parse_triplet or tensor_triplet).
std::string render(const Triplet& t);

}  // namespace pvcastle
