#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace capdiag {

/// C_n from the fundamental recurrence with C_0 = 1. The table is filled once
/// (thread-safe) up to the largest value representable in 64 bits; larger n
/// throws std::overflow_error.
std::uint64_t catalan(int n);

/// Largest n accepted by catalan().
int catalan_max_index();

/// Right-hand side of the fundamental recurrence for C_{n+1}, evaluated with
/// overflow checks: sum over i = 1..n+1 of C_{n-i+1} C_{i-1}.
std::uint64_t catalan_recurrence_rhs(int n);

/// A noncrossing perfect matching of the points {0, ..., 2n-1}; arcs are
/// (left, right) pairs sorted by left endpoint.
struct ArcSystem {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  friend auto operator<=>(const ArcSystem&, const ArcSystem&) = default;
  friend bool operator==(const ArcSystem&, const ArcSystem&) = default;
};

/// Perfect matching of {0, ..., 2n-1} with no two arcs crossing.
bool is_valid_arc_system(const ArcSystem& s);

/// All arc systems on 2n points, sorted. Throws std::invalid_argument for
/// n < 0 or n > 14.
std::vector<ArcSystem> enumerate_arc_systems(int n);

struct ArcCapComparison {
  std::uint64_t arc_systems = 0;    // |A_k|
  std::uint64_t cap_diagrams = 0;   // |B_k|
  bool equal = false;
};

/// Compares the number of arc systems on 2k points with the number of cap
/// diagrams matching (2, 4, ..., 2k-2). Throws std::invalid_argument for k < 1.
ArcCapComparison exercise1_count_check(int k);

/// Number of noncrossing perfect matchings confined to the block {1, ..., 2m},
/// counted as the subsets of the block whose cap diagram closes inside it.
/// Throws std::invalid_argument for m < 0 or m > 14.
std::uint64_t exercise2_confined_count(int m);

}  // namespace capdiag
