#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capdiag/weight.hpp"

namespace capdiag {

struct SweepOptions {
  int rank = 1;
  /// Functions with a_r = 2 * rank and a_1 >= 2 * rank - window are swept.
  int window = 4;
  int jobs = 1;
  /// Ranks above this are rejected as a usage error.
  int max_rank = 5;
  /// Oracle equivalence on every function up to this rank, on a random
  /// sample of `oracle_samples` functions above it.
  int oracle_full_max_rank = 4;
  std::size_t oracle_samples = 200;
  /// Oracle window stability (margin 5) on every function up to this rank.
  int stability_max_rank = 3;
  std::uint64_t seed = 1;
  /// Wall-clock budget; exceeding it aborts with an incomplete report.
  std::optional<double> time_budget_seconds;
};

struct SweepReport {
  int rank = 0;
  int window = 0;
  std::size_t candidates = 0;
  std::size_t tested = 0;
  std::size_t max_flat = 0;
  std::vector<WeightFunction> extremal;
  std::size_t min_flat = 0;
  std::vector<WeightFunction> minimal;
  std::size_t max_lm_star = 0;
  std::size_t oracle_checked = 0;
  std::size_t stability_checked = 0;
  std::vector<std::string> violations;
  bool complete = true;
  double seconds = 0.0;
};

/// Every weight function of the given rank with anchor 2 * rank and smallest
/// entry >= 2 * rank - window, in lexicographic order.
std::vector<WeightFunction> sweep_functions(int rank, int window);

/// Violations found for one function; empty when every check passes.
std::vector<std::string> check_function(const WeightFunction& f, bool with_oracle,
                                        bool with_stability);

/// Exhaustive sweep over sweep_functions(rank, window). Throws
/// std::invalid_argument when rank < 1, rank > max_rank or window < 2 * rank.
SweepReport run_sweep(const SweepOptions& opts);

}  // namespace capdiag
