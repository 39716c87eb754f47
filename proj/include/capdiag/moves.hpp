#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "capdiag/tally.hpp"
#include "capdiag/weight.hpp"

namespace capdiag {

/// Index of a piece of the flat decomposition: either the formal half index
/// (the identity move) or a positive step i, whose move sends the anchor a to
/// a + 1 - 2i.
class MoveIndex {
 public:
  static MoveIndex half() noexcept { return MoveIndex(0); }
  /// Throws std::invalid_argument for i < 1.
  static MoveIndex step(int i);

  [[nodiscard]] bool is_half() const noexcept { return step_ == 0; }
  /// Throws std::logic_error on the half index.
  [[nodiscard]] int step() const;

  /// "half" or "step-i".
  [[nodiscard]] std::string label() const;

  friend bool operator==(MoveIndex, MoveIndex) = default;

  /// Report order: half first, then steps ascending. Only used to keep
  /// containers deterministic.
  struct ReportOrder {
    bool operator()(MoveIndex a, MoveIndex b) const noexcept { return a.step_ < b.step_; }
  };

 private:
  explicit MoveIndex(int s) noexcept : step_(s) {}
  int step_;
};

/// Target of the move with index `idx` out of the anchor a.
int move_target(int anchor, MoveIndex idx);

/// L^a_b f: the x at a becomes a dot and the dot at b becomes an x. b == a is
/// the identity. Throws std::invalid_argument if a is not an entry, b > a, or
/// b != a is already an entry.
WeightFunction apply_move(const WeightFunction& f, int a, int b);

/// True iff L^a_b is a legal move of f: a is an entry, and either b == a, or
/// b < a is a dot with tally(a) - tally(b) == 1 (equal numbers of x and dot
/// strictly between b and a).
bool is_legal_move(const WeightFunction& f, int a, int b);

/// LM* f: the half index plus Step(i) for every legal move from the anchor to
/// a + 1 - 2i. Throws std::domain_error for r = 0.
std::vector<MoveIndex> legal_move_indices(const WeightFunction& f);

/// One piece of the flat decomposition.
struct FlatPiece {
  MoveIndex index = MoveIndex::half();
  /// Position the anchor's x moves to (the anchor itself for the half piece).
  int target = 0;
  /// Sorted lexicographically.
  std::vector<WeightFunction> members;
  /// Distinct configurations strictly left of the cap (target, anchor) and
  /// strictly under it. For the half piece left_size = |members| and
  /// under_size = 1.
  std::size_t left_size = 0;
  std::size_t under_size = 0;
};

struct FlatDecomposition {
  WeightFunction base;
  /// Half piece first, then steps ascending. Empty for r = 0.
  std::vector<FlatPiece> pieces;

  /// Union of all pieces, sorted. For r = 0 this is {()}.
  [[nodiscard]] std::vector<WeightFunction> all() const;
  [[nodiscard]] std::size_t total() const;
};

/// Enumerates the matching set of f by recursion on the rank: the half piece
/// extends each member of the truncated function's set by the anchor, and each
/// step piece moves the anchor of a half member to its legal target b, keeping
/// results whose cap diagram matches f and joins b to the anchor.
FlatDecomposition flat_recursive(const WeightFunction& f);

/// Brute force: every strictly increasing r-tuple with entries in
/// [a_1 - 2r - margin, a_r + margin] whose cap diagram matches f. Sorted.
std::vector<WeightFunction> flat_oracle(const WeightFunction& f, int margin = 0);

struct PieceCount {
  MoveIndex index = MoveIndex::half();
  std::size_t size = 0;
  std::size_t left_size = 0;
  std::size_t under_size = 0;
};

std::vector<PieceCount> decomposition_counts(const FlatDecomposition& d);

struct LmStarCheck {
  std::size_t count = 0;
  /// count == r + 1
  bool is_extremal = false;
  /// is_extremal == is_zigzag(f)
  bool agrees_with_zigzag = false;
};

/// Throws std::domain_error for r = 0.
LmStarCheck lm_star_count_bound_check(const WeightFunction& f);

}  // namespace capdiag
