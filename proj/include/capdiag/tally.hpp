#pragma once

#include <string_view>
#include <vector>

#include "capdiag/weight.hpp"

namespace capdiag {

/// Integer tally of a weight function on a window: stepping right past an x
/// adds one, past a dot subtracts one, and the anchor a_r has value 1.
class TallyProfile {
 public:
  TallyProfile(WeightFunction f, Window window, std::vector<int> values);

  [[nodiscard]] const WeightFunction& weight() const noexcept { return f_; }
  [[nodiscard]] Window window() const noexcept { return window_; }
  [[nodiscard]] std::span<const int> values() const noexcept { return values_; }

  /// Throws std::out_of_range outside the window.
  [[nodiscard]] int value(int z) const;

 private:
  WeightFunction f_;
  Window window_;
  std::vector<int> values_;
};

enum class PointClass { LocalMax, LocalMin, SlopeUp, SlopeDown };

std::string_view to_string(PointClass c) noexcept;

/// [a_1 - 2r - 1, a_r + 2]: contains the wiggle and every zero left of the
/// anchor. Throws std::domain_error for r = 0.
Window default_window(const WeightFunction& f);

/// Throws std::domain_error for the empty function and std::invalid_argument
/// when the window misses part of [a_1 - 1, a_r].
TallyProfile tally(const WeightFunction& f, Window window);
inline TallyProfile tally(const WeightFunction& f) { return tally(f, default_window(f)); }

/// All dots z <= a_r with value 0, ascending: the points where the tally
/// steps down onto zero, and hence the legal targets for the anchor's x. A
/// zero at an x (such as a_r - 1 when a_r - 1 is an entry) is not a move
/// target and is not listed. Left of a_1 the tally grows by one
/// per step leftward, so a positive value at the left window edge certifies
/// completeness; otherwise std::invalid_argument is thrown.
std::vector<int> zeros_left_of_anchor(const TallyProfile& t);

/// Throws std::out_of_range unless c - 1 and c + 1 lie in the window.
PointClass classify_point(const TallyProfile& t, int c);

/// f = (s, s+2, ..., s+2r-2) for some s. Throws std::domain_error for r = 0.
bool is_zigzag(const WeightFunction& f);

}  // namespace capdiag
