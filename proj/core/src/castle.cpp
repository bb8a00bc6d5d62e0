#include "pvcastle/castle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pvcastle {

namespace {

void require_supported_a(const Int& a) {
  if (!(a == 2 || a == 3 || a == 5))
    throw UnsupportedA("a must be 2, 3 or 5");
}

Int product(const std::vector<Int>& parts) {
  Int p = 1;
  for (const Int& m : parts) p *= m;
  return p;
}

}  // namespace

Solution::Solution(Int a_in, std::vector<Int> parts_in)
    : a(std::move(a_in)), parts(std::move(parts_in)) {
  if (a < 2) throw ValueError("solution: a must be >= 2");
  if (parts.empty()) throw ValueError("solution: needs at least one part");
  for (const Int& m : parts)
    if (m < 1) throw ValueError("solution: parts must be positive");
  std::sort(parts.begin(), parts.end());
}

bool solution_less(const Solution& lhs, const Solution& rhs) {
  if (lhs.a != rhs.a) return lhs.a < rhs.a;
  if (lhs.k() != rhs.k()) return lhs.k() < rhs.k();
  for (std::size_t i = 0; i < lhs.k(); ++i)
    if (lhs.parts[i] != rhs.parts[i]) return lhs.parts[i] < rhs.parts[i];
  return false;
}

Int residual(const Solution& s) {
  Int r = s.a * s.a;
  for (const Int& m : s.parts) r += m * m;
  r -= static_cast<long>(s.k());
  r -= 2 * s.a * product(s.parts);
  return r;
}

Solution sc_transform(const Solution& s, std::size_t position) {
  const std::size_t k = s.k();
  if (position < 1 || position > k + 1)
    throw PositionOutOfRange("sc_transform: position out of range");
  std::vector<Int> parts = s.parts;
  if (position == k + 1) {
    Int appended = 2 * s.a * product(parts) - 1;
    if (appended <= 0)
      throw NonPositiveResult("sc_transform: appended part not positive");
    parts.push_back(std::move(appended));
    return Solution(s.a, std::move(parts));
  }
  Int others = 1;
  for (std::size_t j = 0; j < k; ++j)
    if (j != position - 1) others *= parts[j];
  Int replaced = 2 * s.a * others - parts[position - 1];
  if (replaced <= 0)
    throw NonPositiveResult("sc_transform: replacement not positive");
  parts[position - 1] = std::move(replaced);
  return Solution(s.a, std::move(parts));
}

Descent descend(const Solution& s) {
  require_supported_a(s.a);
  if (!is_zero(residual(s))) throw NotASolution("descend: residual != 0");

  Solution cur = s;
  std::vector<PathStep> steps;  // descent order; reversed below
  std::size_t sc_steps = 0;

  for (;;) {
    if (cur.k() >= 2 && cur.parts.front() == 1) {
      cur.parts.erase(cur.parts.begin());
      steps.push_back(PathStep{true, 0});
      continue;
    }
    if (cur.k() == 1) {
      if (cur.parts[0] == cur.a + 1) {
        cur = sc_transform(cur, 1);  // (a; a+1) -> (a; a-1)
        steps.push_back(PathStep{false, 1});
        ++sc_steps;
        continue;
      }
      break;  // (a; a-1)
    }
    // k >= 2, min part >= 2: the Lemma guarantees the largest position
    // strictly decreases and stays positive.
    Solution next = sc_transform(cur, cur.k());
    Int others = 1;
    for (std::size_t j = 0; j + 1 < cur.k(); ++j) others *= cur.parts[j];
    const Int created = 2 * cur.a * others - cur.parts.back();
    const std::size_t q = static_cast<std::size_t>(
        std::lower_bound(next.parts.begin(), next.parts.end(), created) -
        next.parts.begin());
    steps.push_back(PathStep{false, q + 1});
    ++sc_steps;
    cur = std::move(next);
  }

  std::reverse(steps.begin(), steps.end());
  return Descent{std::move(cur), std::move(steps), sc_steps};
}

Solution replay(const Solution& base, const std::vector<PathStep>& path) {
  Solution cur = base;
  for (const PathStep& step : path) {
    if (step.add_one) {
      std::vector<Int> parts = cur.parts;
      parts.push_back(1);
      cur = Solution(cur.a, std::move(parts));
    } else {
      cur = sc_transform(cur, step.position);
    }
  }
  return cur;
}

std::vector<Solution> enumerate_solutions(const Int& a, const Int& max_part,
                                          std::size_t max_k) {
  require_supported_a(a);
  if (max_part < 1 || max_k < 1)
    throw ValueError("enumerate: bounds must be positive");

  std::set<Solution, SolutionLess> visited;
  std::deque<Solution> frontier;
  Solution base(a, {Int(a - 1)});
  if (base.parts.back() <= max_part) {
    visited.insert(base);
    frontier.push_back(std::move(base));
  }

  auto offer = [&](Solution child) {
    if (child.k() > max_k || child.parts.back() > max_part) return;
    if (visited.insert(child).second) frontier.push_back(std::move(child));
  };

  while (!frontier.empty()) {
    Solution s = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t pos = 1; pos <= s.k() + 1; ++pos)
      offer(sc_transform(s, pos));
    if (s.k() + 1 <= max_k) {
      // appending a 1 preserves the residual: +1 to the square sum, -1 via k
      std::vector<Int> parts = s.parts;
      parts.push_back(1);
      offer(Solution(s.a, std::move(parts)));
    }
  }
  return std::vector<Solution>(visited.begin(), visited.end());
}

bool is_essential(const Solution& s) {
  for (const Int& m : s.parts)
    if (m == 1) return false;
  return true;
}

std::vector<Solution> repetition_filter(std::vector<Solution> solutions,
                                        const Int& a) {
  if (a != 3) return solutions;
  std::erase_if(solutions, [](const Solution& s) {
    return std::find(s.parts.begin(), s.parts.end(), Int(2)) != s.parts.end();
  });
  return solutions;
}

}  // namespace pvcastle
