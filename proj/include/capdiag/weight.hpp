#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace capdiag {

/// Closed integer interval [lo, hi].
struct Window {
  int lo = 0;
  int hi = -1;

  [[nodiscard]] bool contains(int z) const noexcept { return lo <= z && z <= hi; }
  [[nodiscard]] bool contains(Window other) const noexcept {
    return other.lo >= lo && other.hi <= hi;
  }
  [[nodiscard]] int width() const noexcept { return hi - lo + 1; }

  friend bool operator==(Window, Window) = default;
};

/// A weight function: the strictly increasing positions of the symbol x on
/// the integer line. Every other integer carries a dot.
class WeightFunction {
 public:
  WeightFunction() = default;

  /// Throws std::invalid_argument unless `entries` is strictly increasing.
  explicit WeightFunction(std::vector<int> entries);

  /// Builds (start, start + step, ..., start + (count - 1) * step).
  static WeightFunction arithmetic(int start, int step, int count);

  [[nodiscard]] std::size_t rank() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::span<const int> entries() const noexcept { return entries_; }

  /// True iff z carries an x.
  [[nodiscard]] bool contains(int z) const noexcept;

  /// Smallest entry a_1. Throws std::domain_error on the empty function.
  [[nodiscard]] int front() const;
  /// Largest entry a_r, the anchor of the tally. Throws std::domain_error on
  /// the empty function.
  [[nodiscard]] int anchor() const;

  [[nodiscard]] WeightFunction shifted(int s) const;
  /// Drops the largest entry.
  [[nodiscard]] WeightFunction truncated() const;

  /// Equal up to shift: entry-wise differences are constant.
  [[nodiscard]] bool same_shape(const WeightFunction& other) const noexcept;

  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const WeightFunction&, const WeightFunction&) = default;
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::vector<int> entries_;
};

/// Parses "a1,a2,...,ar" (whitespace tolerated, empty string is the empty
/// function). Throws std::invalid_argument on malformed or non-increasing
/// input.
WeightFunction parse_weight_function(const std::string& text);

/// Cap joining start < end.
struct Cap {
  int start = 0;
  int end = 0;

  friend auto operator<=>(const Cap&, const Cap&) = default;
  friend bool operator==(const Cap&, const Cap&) = default;
};

/// A set of caps that pairwise do not cross and whose interiors consist of
/// endpoints of nested caps only. Caps are kept sorted by start.
class CapDiagram {
 public:
  CapDiagram() = default;

  /// Validates the cap diagram invariants; throws std::invalid_argument with
  /// the first violation found.
  explicit CapDiagram(std::vector<Cap> caps);

  /// Empty optional when `caps` forms a valid cap diagram, otherwise a
  /// description of the first violated invariant.
  static std::optional<std::string> violation(std::span<const Cap> caps);

  [[nodiscard]] std::span<const Cap> caps() const noexcept { return caps_; }
  [[nodiscard]] std::size_t size() const noexcept { return caps_.size(); }
  [[nodiscard]] bool contains(Cap c) const noexcept;

  /// Number of caps strictly enclosing c (0 for outermost caps).
  [[nodiscard]] int nesting_depth(Cap c) const noexcept;
  /// 1 for caps with nothing underneath, else 1 + height of the tallest cap
  /// directly below.
  [[nodiscard]] int height(Cap c) const noexcept;

  friend bool operator==(const CapDiagram&, const CapDiagram&) = default;

 private:
  struct Unchecked {};
  CapDiagram(Unchecked, std::vector<Cap> caps) : caps_(std::move(caps)) {}

  std::vector<Cap> caps_;

  friend CapDiagram build_cap_diagram(const WeightFunction&);
};

/// D_cap(f): one cap per entry of f. Entries are processed from right to left
/// and the cap starting at b ends at the leftmost z > b that is neither an
/// entry of f nor the end of an already placed cap.
CapDiagram build_cap_diagram(const WeightFunction& f);

/// True iff the diagram has #f caps, every entry of f is a cap endpoint, and
/// every cap joins an x of f to a dot of f.
bool matches(const CapDiagram& c, const WeightFunction& f);

}  // namespace capdiag
