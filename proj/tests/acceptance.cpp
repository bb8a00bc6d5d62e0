// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line per criterion. Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pvcastle/dsl.hpp"
#include "pvcastle/pv.hpp"
#include "testutil.hpp"

using namespace pvcastle;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": "
            << what;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Solution sol(long a, std::vector<long> parts) {
  std::vector<Int> ps(parts.begin(), parts.end());
  return Solution(Int(a), std::move(ps));
}

// ---- criterion 1: golden castling-tree solutions --------------------------

void criterion_1() {
  const auto start = Clock::now();
  std::vector<Solution> sols = enumerate_solutions(Int(2), Int(200), 3);
  const double elapsed = ms_since(start);

  const std::vector<std::string> golden = {
      "(2; 1)", "(2; 3)", "(2; 3, 11)", "(2; 11, 41)", "(2; 41, 153)"};
  std::set<std::string> rendered;
  bool sound = true;
  for (const Solution& s : sols) {
    rendered.insert(render(s));
    sound = sound && is_zero(residual(s)) && s.k() <= 3 && s.parts.back() <= 200;
  }
  bool found = true;
  std::string missing;
  for (const std::string& g : golden)
    if (!rendered.count(g)) {
      found = false;
      missing += g + " ";
    }
  std::ostringstream detail;
  detail << sols.size() << " solutions in " << elapsed << " ms";
  if (!missing.empty()) detail << "; missing " << missing;
  report(1, found && sound && elapsed < 1000.0,
         "enumerate(2, 200, 3) carries the five golden canonical forms",
         detail.str());
}

// ---- criterion 2: residual zero on the listed solutions -------------------

void criterion_2() {
  const std::vector<Solution> listed = {
      sol(2, {3}),     sol(2, {3, 11}), sol(2, {3, 11, 131}), sol(2, {11, 41}),
      sol(3, {2}),     sol(3, {4}),     sol(5, {4}),          sol(5, {6}),
  };
  bool ok = true;
  double worst = 0.0;
  for (const Solution& s : listed) {
    const auto start = Clock::now();
    const bool zero = is_zero(residual(s));
    worst = std::max(worst, ms_since(start));
    ok = ok && zero;
  }
  std::ostringstream detail;
  detail << listed.size() << " solutions, slowest " << worst << " ms";
  report(2, ok && worst < 1.0, "residual vanishes on the listed solutions",
         detail.str());
}

// ---- criterion 3: bit-exact symmetric-power matrix ------------------------

RationalMatrix sym3_reference(long a, long b, long c, long d) {
  RationalMatrix m(4, 4);
  m.set(0, 0, 3 * a);
  m.set(0, 1, b);
  m.set(1, 0, 3 * c);
  m.set(1, 1, 2 * a + d);
  m.set(1, 2, 2 * b);
  m.set(2, 1, 2 * c);
  m.set(2, 2, a + 2 * d);
  m.set(2, 3, 3 * b);
  m.set(3, 2, c);
  m.set(3, 3, 3 * d);
  return m;
}

void criterion_3() {
  std::mt19937_64 rng(33003);
  bool ok = true;
  for (int it = 0; it < 10; ++it) {
    const long a = static_cast<long>(rng() % 21) - 10;
    const long b = static_cast<long>(rng() % 21) - 10;
    const long c = static_cast<long>(rng() % 21) - 10;
    RationalMatrix x(2, 2);
    x.set(0, 0, a);
    x.set(0, 1, b);
    x.set(1, 0, c);
    x.set(1, 1, -a);
    ok = ok && sym_power_action(3, x) == sym3_reference(a, b, c, -a);
  }
  report(3, ok, "sym_power(3,2) matches the printed 4x4 matrix entrywise",
         "10 random traceless integer inputs");
}

// ---- criterion 4: PV certificates for the reduced list --------------------

void criterion_4() {
  struct Case {
    Solution s;
    std::size_t dim;
  };
  const std::vector<Case> cases = {
      {sol(2, {1}), 4}, {sol(3, {2}), 12}, {sol(5, {4}), 40}};
  bool ok = true;
  std::ostringstream detail;
  for (const Case& c : cases) {
    const auto start = Clock::now();
    Triplet t = tensor_triplet(c.s);
    PvCheckResult res = is_pv_type_ifps(t, c.s);
    const double elapsed = ms_since(start);
    const bool good = res.is_pv_type_ifps &&
                      res.certificate.orbit_rank == c.dim &&
                      res.certificate.isotropy_dim == 0 && elapsed < 2000.0;
    ok = ok && good;
    detail << render(c.s) << " rank " << res.certificate.orbit_rank << " in "
           << elapsed << " ms; ";
  }
  // the explicit witness (1,0,0,1) for the first triplet
  Triplet a = tensor_triplet(sol(2, {1}));
  std::vector<Rat> v{1, 0, 0, 1};
  const bool witness_ok = is_generic(a, v) && isotropy_dim(a, v) == 0;
  ok = ok && witness_ok;
  detail << "witness (1,0,0,1) " << (witness_ok ? "certified" : "REJECTED");
  report(4, ok, "reduced triplets certify with full rank and isotropy 0",
         detail.str());
}

// ---- criterion 5: castling proposition cross-check ------------------------

void criterion_5() {
  // (text, n) pairs pre-verified to be PVs; the witness search re-certifies
  // each run with exact ranks.
  const std::vector<std::pair<const char*, std::size_t>> pool = {
      {"gl(1)+sl(2) : L1#L1", 1},        {"gl(1)+sl(2) : L1#L1*", 1},
      {"gl(1)+sl(2) : L1#2L1", 1},       {"gl(1)+sl(2) : L1#2L1", 2},
      {"gl(1)+sl(2) : L1#3L1", 3},       {"gl(1)+sl(3) : L1#L1", 1},
      {"gl(1)+sl(3) : L1#L1", 2},        {"gl(1)+sl(3) : L1#L1*", 1},
      {"gl(1)+sl(3) : L1#L1*", 2},       {"gl(1)+sl(3) : L1#L2", 1},
      {"gl(1)+sl(3) : L1#L2", 2},        {"gl(1)+sl(3) : L1#2L1", 1},
      {"gl(1)+sl(3) : L1#2L1", 2},       {"gl(1)+sl(3) : L1#2L1", 4},
      {"gl(1)+sl(3) : L1#2L1", 5},       {"sl(2) : L1", 1},
      {"sl(2) : 3L1", 1},                {"sl(2) : 3L1", 3},
      {"sl(3) : L1", 1},                 {"sl(3) : L1", 2},
      {"sl(3) : L2", 1},                 {"sl(3) : L2", 2},
      {"sl(3) : 2L1", 1},                {"sl(3) : 2L1", 2},
      {"sl(3) : 2L1", 4},                {"sl(3) : 2L1", 5},
      {"sl(2)+sl(2) : L1#L1", 1},        {"sl(2)+sl(2) : L1#L1", 2},
      {"sl(2)+sl(2) : L1#L1", 3},        {"gl(1)+sl(2)+sl(2) : L1#L1#L1", 1},
      {"gl(1)+sl(2)+sl(2) : L1#L1#L1", 2},
      {"gl(1)+sl(2)+sl(2) : L1#L1#L1", 3},
  };

  const auto start = Clock::now();
  SearchParams params;
  params.seed = 55005;
  params.trials = 64;
  params.coeff_bound = 6;

  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(params.seed);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng() % i]);

  bool ok = true;
  std::size_t done = 0;

  // the worked example first, then 20 sampled instances
  std::vector<std::pair<const char*, std::size_t>> cases = {
      {"gl(1)+sl(2) : L1#3L1", 1}};
  for (std::size_t i = 0; i < 20; ++i) cases.push_back(pool[order[i]]);

  for (const auto& [text, n] : cases) {
    Triplet h = parse_triplet(text);
    CastlingReport rep = castling_check(h.rep, n, params);
    const bool good = rep.side1_generic && rep.side2_generic &&
                      rep.side1_isotropy_dim == rep.side2_isotropy_dim &&
                      rep.h_block_kernel_dim == rep.side1_isotropy_dim;
    if (!good) {
      std::cout << "        castling mismatch at " << text << " n=" << n << "\n";
      ok = false;
    }
    ++done;
  }
  const double elapsed = ms_since(start);
  std::ostringstream detail;
  detail << done << " instances (worked example + 20 sampled) in " << elapsed
         << " ms";
  report(5, ok && elapsed < 10000.0,
         "both castling sides generic with equal isotropy dimensions",
         detail.str());
}

// ---- criteria 6-8: exhaustive checks over the enumeration -----------------

std::vector<Solution> desk_enumeration(long a) {
  return enumerate_solutions(Int(a), Int(1000000), 4);
}

void criterion_6(const std::vector<std::vector<Solution>>& families) {
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& family : families)
    for (const Solution& s : family) {
      if (s.k() < 2 || s.parts.front() < 2) continue;
      Int others = 1;
      for (std::size_t j = 0; j + 1 < s.k(); ++j) others *= s.parts[j];
      const Int replaced = 2 * s.a * others - s.parts.back();
      ok = ok && replaced > 0 && replaced < s.parts.back();
      ++checked;
    }
  std::ostringstream detail;
  detail << checked << " essential solutions with parts <= 10^6, k <= 4";
  report(6, ok && checked > 0,
         "0 < 2a m_1...m_{k-1} - m_k < m_k over the whole enumeration",
         detail.str());
}

void criterion_7(const std::vector<std::vector<Solution>>& families) {
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& family : families)
    for (const Solution& s : family) {
      Descent d = descend(s);
      ok = ok && d.base.k() == 1 && d.base == sol(s.a.get_si(), {s.a.get_si() - 1});
      ok = ok && replay(d.base, d.forward_path) == s;
      ++checked;
    }
  std::ostringstream detail;
  detail << checked << " solutions descended and replayed";
  report(7, ok && checked > 0,
         "descent reaches the k=1 base and the recorded path replays",
         detail.str());
}

void criterion_8(const std::vector<std::vector<Solution>>& families) {
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& family : families)
    for (const Solution& s : family) {
      const Int r = residual(s);
      for (std::size_t pos = 1; pos <= s.k() + 1; ++pos) {
        ok = ok && residual(sc_transform(s, pos)) == r;
        ++checked;
      }
    }
  std::ostringstream detail;
  detail << checked << " (solution, position) pairs";
  report(8, ok && checked > 0, "sc-transforms preserve the residual",
         detail.str());
}

// ---- criterion 9: brute-force oracle equivalence ---------------------------

void criterion_9() {
  const auto start = Clock::now();
  bool ok = true;
  std::size_t total = 0;
  for (long a : {2L, 3L, 5L}) {
    auto brute = testutil::brute_force_solutions(a, 60, 3);
    auto sols = enumerate_solutions(Int(a), Int(60), 3);
    std::set<Solution, SolutionLess> found(sols.begin(), sols.end());
    ok = ok && found == brute;
    total += brute.size();
  }
  const double elapsed = ms_since(start);
  std::ostringstream detail;
  detail << total << " box solutions matched in " << elapsed << " ms";
  report(9, ok && elapsed < 30000.0,
         "independent box search equals enumerate on k <= 3, m_i <= 60",
         detail.str());
}

// ---- criterion 10: homomorphism suite --------------------------------------

void criterion_10() {
  bool ok = true;
  std::size_t checked = 0;
  auto check = [&](const Representation& r) {
    ok = ok && homomorphism_property_holds(r);
    ++checked;
  };

  for (std::size_t n = 1; n <= 5; ++n) {
    check(identity_rep(n));
    check(dual_rep(identity_rep(n)));
  }
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = 2; n <= 3; ++n) {
      check(sym_power(d, n));
      check(dual_rep(sym_power(d, n)));
    }
  for (std::size_t n = 2; n <= 5; ++n) {
    check(ext_square(n));
    check(dual_rep(ext_square(n)));
  }

  // every distinct tensor triplet with space dimension <= 132
  std::set<std::string> seen;
  std::size_t triplets = 0;
  for (long a : {2L, 3L, 5L}) {
    for (const Solution& s : enumerate_solutions(Int(a), Int(60), 3)) {
      Int space = 2 * s.a;
      for (const Int& m : s.parts) space *= m;
      if (space > 132) continue;
      Triplet t = tensor_triplet(s);
      if (!seen.insert(render(t)).second) continue;  // sl(1)-padded duplicate
      check(t.rep);
      ++triplets;
    }
  }
  std::ostringstream detail;
  detail << checked << " representations (" << triplets
         << " tensor triplets), all basis pairs";
  report(10, ok, "matrix([X,Y]) = [matrix(X), matrix(Y)] exactly", detail.str());
}

// ---- criterion 11: repetition exclusion ------------------------------------

void criterion_11() {
  using Multiset = std::vector<Int>;
  auto family = [](long a) {
    std::set<Multiset> out;
    for (const Solution& s :
         repetition_filter(enumerate_solutions(Int(a), Int(200), 3), Int(a))) {
      Multiset m = s.parts;
      m.push_back(s.a);
      std::sort(m.begin(), m.end());
      out.insert(std::move(m));
    }
    return out;
  };
  const auto f2 = family(2), f3 = family(3), f5 = family(5);
  auto disjoint = [](const std::set<Multiset>& x, const std::set<Multiset>& y) {
    for (const auto& m : x)
      if (y.count(m)) return false;
    return true;
  };
  const bool ok = disjoint(f2, f3) && disjoint(f2, f5) && disjoint(f3, f5);
  std::ostringstream detail;
  detail << "family sizes " << f2.size() << "/" << f3.size() << "/" << f5.size()
         << ", parts <= 200";
  report(11, ok, "filtered a=2,3,5 families are pairwise disjoint as multisets",
         detail.str());
}

// ---- criterion 12: desk-scale boundary --------------------------------------

void criterion_12() {
  // (2; 3, 11, 131) has space dimension 17292: criteria 2, 6, 7, 8 apply to
  // it, PV certification deliberately does not.
  const Solution big = sol(2, {3, 11, 131});
  bool ok = is_zero(residual(big));

  Int others = 1;
  for (std::size_t j = 0; j + 1 < big.k(); ++j) others *= big.parts[j];
  const Int replaced = 2 * big.a * others - big.parts.back();
  ok = ok && replaced > 0 && replaced < big.parts.back();

  Descent d = descend(big);
  ok = ok && d.base == sol(2, {1}) && replay(d.base, d.forward_path) == big;

  const Int r = residual(big);
  for (std::size_t pos = 1; pos <= big.k() + 1; ++pos)
    ok = ok && residual(sc_transform(big, pos)) == r;

  Int space = 2 * big.a;
  for (const Int& m : big.parts) space *= m;
  ok = ok && space == 17292 && space > 500;

  report(12, ok,
         "space dim 17292 case passes criteria 2/6/7/8; certification stays "
         "desk-scale",
         "(2; 3, 11, 131)");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();

  std::vector<std::vector<Solution>> families;
  for (long a : {2L, 3L, 5L}) families.push_back(desk_enumeration(a));
  criterion_6(families);
  criterion_7(families);
  criterion_8(families);

  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();

  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criteria failed")
            << std::endl;
  return g_failures;
}
