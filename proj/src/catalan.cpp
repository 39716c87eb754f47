#include "capdiag/catalan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "capdiag/moves.hpp"

namespace capdiag {

namespace {

bool checked_mul_add(std::uint64_t acc, std::uint64_t x, std::uint64_t y, std::uint64_t& out) {
  std::uint64_t prod = 0;
  if (__builtin_mul_overflow(x, y, &prod)) return false;
  return !__builtin_add_overflow(acc, prod, &out);
}

const std::vector<std::uint64_t>& catalan_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> c{1};
    for (;;) {
      const std::size_t r = c.size() - 1;  // computing C_{r+1}
      std::uint64_t sum = 0;
      bool ok = true;
      for (std::size_t i = 1; i <= r + 1 && ok; ++i) {
        ok = checked_mul_add(sum, c[r - i + 1], c[i - 1], sum);
      }
      if (!ok) break;
      c.push_back(sum);
    }
    return c;
  }();
  return table;
}

}  // namespace

std::uint64_t catalan(int n) {
  if (n < 0) throw std::invalid_argument("Catalan index must be non-negative");
  const auto& t = catalan_table();
  if (static_cast<std::size_t>(n) >= t.size()) {
    throw std::overflow_error("C_" + std::to_string(n) + " does not fit in 64 bits");
  }
  return t[static_cast<std::size_t>(n)];
}

int catalan_max_index() { return static_cast<int>(catalan_table().size()) - 1; }

std::uint64_t catalan_recurrence_rhs(int n) {
  if (n < 0) throw std::invalid_argument("Catalan index must be non-negative");
  std::uint64_t sum = 0;
  for (int i = 1; i <= n + 1; ++i) {
    if (!checked_mul_add(sum, catalan(n - i + 1), catalan(i - 1), sum)) {
      throw std::overflow_error("recurrence for C_" + std::to_string(n + 1) + " overflows");
    }
  }
  return sum;
}

bool is_valid_arc_system(const ArcSystem& s) {
  if (s.n < 0 || s.arcs.size() != static_cast<std::size_t>(s.n)) return false;
  std::vector<int> seen(static_cast<std::size_t>(2 * s.n), 0);
  for (const auto& [p, q] : s.arcs) {
    if (p >= q || p < 0 || q >= 2 * s.n) return false;
    if (seen[static_cast<std::size_t>(p)]++ || seen[static_cast<std::size_t>(q)]++) return false;
  }
  for (const auto& [p, q] : s.arcs) {
    for (const auto& [u, v] : s.arcs) {
      if (p < u && u < q && q < v) return false;
    }
  }
  return true;
}

namespace {

// Pairs the smallest free point with every later free point that does not
// cross an arc already drawn.
void extend_matching(int points, std::vector<int>& partner, std::vector<std::pair<int, int>>& arcs,
                     std::vector<ArcSystem>& out, int n) {
  int p = 0;
  while (p < points && partner[static_cast<std::size_t>(p)] >= 0) ++p;
  if (p == points) {
    auto sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    out.push_back({n, std::move(sorted)});
    return;
  }
  for (int q = p + 1; q < points; ++q) {
    if (partner[static_cast<std::size_t>(q)] >= 0) continue;
    const bool crosses = std::any_of(arcs.begin(), arcs.end(), [&](const auto& arc) {
      return (arc.first < p && p < arc.second && arc.second < q) ||
             (p < arc.first && arc.first < q && q < arc.second);
    });
    if (crosses) continue;
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
    arcs.emplace_back(p, q);
    extend_matching(points, partner, arcs, out, n);
    arcs.pop_back();
    partner[static_cast<std::size_t>(p)] = -1;
    partner[static_cast<std::size_t>(q)] = -1;
  }
}

}  // namespace

std::vector<ArcSystem> enumerate_arc_systems(int n) {
  if (n < 0 || n > 14) throw std::invalid_argument("arc system enumeration supports 0 <= n <= 14");
  std::vector<ArcSystem> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  std::vector<std::pair<int, int>> arcs;
  extend_matching(2 * n, partner, arcs, out, n);
  std::sort(out.begin(), out.end());
  return out;
}

ArcCapComparison exercise1_count_check(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  ArcCapComparison c;
  c.arc_systems = enumerate_arc_systems(k).size();
  c.cap_diagrams = flat_oracle(WeightFunction::arithmetic(2, 2, k - 1)).size();
  c.equal = c.arc_systems == c.cap_diagrams;
  return c;
}

std::uint64_t exercise2_confined_count(int m) {
  if (m < 0 || m > 14) throw std::invalid_argument("confined count supports 0 <= m <= 14");
  const int width = 2 * m;
  std::uint64_t count = 0;
  if (m == 0) return 1;
  // Size-m subsets of {1, ..., 2m} as bitmasks, in increasing order.
  const std::uint32_t limit = 1u << width;
  for (std::uint32_t mask = (1u << m) - 1; mask < limit;) {
    std::vector<int> starts;
    for (int b = 0; b < width; ++b) {
      if (mask & (1u << b)) starts.push_back(b + 1);
    }
    const auto diagram = build_cap_diagram(WeightFunction(std::move(starts)));
    const auto caps = diagram.caps();
    if (std::all_of(caps.begin(), caps.end(), [&](const Cap& c) { return c.end <= width; })) {
      ++count;
    }
    const std::uint32_t low = mask & -mask;
    const std::uint32_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return count;
}

}  // namespace capdiag
