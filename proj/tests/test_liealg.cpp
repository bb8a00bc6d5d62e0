#include <random>

#include "doctest.h"
#include "pvcastle/liealg.hpp"
#include "testutil.hpp"

using namespace pvcastle;

namespace {

// Rows = flattened basis matrices of one factor.
RationalMatrix flattened(const std::vector<RationalMatrix>& mats) {
  if (mats.empty()) return RationalMatrix(0, 0);
  const std::size_t n = mats[0].rows();
  RationalMatrix out(mats.size(), n * n);
  for (std::size_t r = 0; r < mats.size(); ++r)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.set(r, i * n + j, mats[r].at(i, j));
  return out;
}

}  // namespace

TEST_CASE("algebra dimensions") {
  CHECK(AlgebraSpec{{FactorSpec::gl1()}}.dim() == 1);
  CHECK(AlgebraSpec{{FactorSpec::gl1(), FactorSpec::sl(2)}}.dim() == 4);
  AlgebraSpec big{{FactorSpec::gl1(), FactorSpec::sl(2), FactorSpec::sl(3),
                   FactorSpec::sl(11)}};
  CHECK(big.dim() == 132);
  CHECK(FactorSpec::sl(1).dim() == 0);
}

TEST_CASE("factor bases") {
  auto gl1 = basis(FactorSpec::gl1());
  REQUIRE(gl1.size() == 1);
  CHECK(gl1[0].at(0, 0) == Rat(1));

  CHECK(basis(FactorSpec::sl(1)).empty());

  auto sl2 = basis(FactorSpec::sl(2));
  REQUIRE(sl2.size() == 3);
  for (const auto& b : sl2) CHECK(is_zero(b.trace()));
  CHECK(rank_exact(flattened(sl2)) == 3);

  // fixed order: E_12, E_21, then E_11 - E_22
  CHECK(sl2[0].at(0, 1) == Rat(1));
  CHECK(sl2[1].at(1, 0) == Rat(1));
  CHECK(sl2[2].at(0, 0) == Rat(1));
  CHECK(sl2[2].at(1, 1) == Rat(-1));
}

TEST_CASE("bases are traceless, independent and closed under commutator") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto b = basis(FactorSpec::sl(n));
    CHECK(b.size() == n * n - 1);
    for (const auto& x : b) CHECK(is_zero(x.trace()));
    CHECK(rank_exact(flattened(b)) == n * n - 1);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        RationalMatrix c = commutator(b[i], b[j]);
        // closure: expanding and re-assembling must reproduce the commutator
        std::vector<Rat> coeffs = expand_in_basis(FactorSpec::sl(n), c);
        RationalMatrix back(n, n);
        for (std::size_t t = 0; t < coeffs.size(); ++t)
          if (!is_zero(coeffs[t])) back += b[t].scaled(coeffs[t]);
        CHECK(back == c);
      }
  }
}

TEST_CASE("expand_in_basis round-trips random traceless elements") {
  std::mt19937_64 rng(8001);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto b = basis(FactorSpec::sl(n));
    for (int it = 0; it < 10; ++it) {
      RationalMatrix x(n, n);
      Rat diag_sum = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j && i + 1 == n) continue;
          Rat v(static_cast<long>(rng() % 11) - 5);
          x.set(i, j, v);
          if (i == j) diag_sum += v;
        }
      x.set(n - 1, n - 1, -diag_sum);
      std::vector<Rat> coeffs = expand_in_basis(FactorSpec::sl(n), x);
      RationalMatrix back(n, n);
      for (std::size_t t = 0; t < coeffs.size(); ++t)
        if (!is_zero(coeffs[t])) back += b[t].scaled(coeffs[t]);
      CHECK(back == x);
    }
  }
}

TEST_CASE("expand_in_basis rejects non-traceless sl elements") {
  CHECK_THROWS_AS(expand_in_basis(FactorSpec::sl(2), RationalMatrix::identity(2)),
                  ValueError);
}
