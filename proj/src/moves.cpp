#include "capdiag/moves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace capdiag {

MoveIndex MoveIndex::step(int i) {
  if (i < 1) throw std::invalid_argument("step index must be positive");
  return MoveIndex(i);
}

int MoveIndex::step() const {
  if (is_half()) throw std::logic_error("the half index has no step value");
  return step_;
}

std::string MoveIndex::label() const {
  return is_half() ? std::string("half") : "step-" + std::to_string(step_);
}

int move_target(int anchor, MoveIndex idx) {
  return idx.is_half() ? anchor : anchor + 1 - 2 * idx.step();
}

WeightFunction apply_move(const WeightFunction& f, int a, int b) {
  if (!f.contains(a)) {
    throw std::invalid_argument("move source " + std::to_string(a) + " is not an entry of " +
                                f.to_string());
  }
  if (b == a) return f;
  if (b > a) throw std::invalid_argument("move target must not lie right of its source");
  if (f.contains(b)) {
    throw std::invalid_argument("move target " + std::to_string(b) + " is already an entry of " +
                                f.to_string());
  }
  std::vector<int> v;
  v.reserve(f.rank());
  for (int x : f.entries()) {
    if (x != a) v.push_back(x);
  }
  v.insert(std::upper_bound(v.begin(), v.end(), b), b);
  return WeightFunction(std::move(v));
}

bool is_legal_move(const WeightFunction& f, int a, int b) {
  if (!f.contains(a) || b > a) return false;
  if (b == a) return true;
  if (f.contains(b)) return false;
  int balance = 0;
  for (int z = b + 1; z < a; ++z) balance += f.contains(z) ? 1 : -1;
  return balance == 0;
}

std::vector<MoveIndex> legal_move_indices(const WeightFunction& f) {
  const TallyProfile t = tally(f);
  const int a = f.anchor();
  std::vector<MoveIndex> out{MoveIndex::half()};
  // Zeros are listed ascending, steps are reported ascending.
  const auto zeros = zeros_left_of_anchor(t);
  for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
    out.push_back(MoveIndex::step((a + 1 - *it) / 2));
  }
  return out;
}

std::vector<WeightFunction> FlatDecomposition::all() const {
  if (base.empty()) return {WeightFunction{}};
  std::vector<WeightFunction> out;
  for (const auto& p : pieces) out.insert(out.end(), p.members.begin(), p.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t FlatDecomposition::total() const {
  if (base.empty()) return 1;
  std::size_t n = 0;
  for (const auto& p : pieces) n += p.members.size();
  return n;
}

namespace {

void split_counts(FlatPiece& piece, int anchor) {
  std::set<std::vector<int>> left;
  std::set<std::vector<int>> under;
  for (const auto& g : piece.members) {
    std::vector<int> l;
    std::vector<int> u;
    for (int x : g.entries()) {
      if (x < piece.target) l.push_back(x);
      else if (x > piece.target && x < anchor) u.push_back(x);
    }
    left.insert(std::move(l));
    under.insert(std::move(u));
  }
  piece.left_size = left.size();
  piece.under_size = under.size();
}

}  // namespace

FlatDecomposition flat_recursive(const WeightFunction& f) {
  FlatDecomposition d{f, {}};
  if (f.empty()) return d;

  const int a = f.anchor();
  const auto lower = flat_recursive(f.truncated()).all();

  FlatPiece half;
  half.index = MoveIndex::half();
  half.target = a;
  half.members.reserve(lower.size());
  for (const auto& g : lower) {
    std::vector<int> v(g.entries().begin(), g.entries().end());
    v.push_back(a);
    half.members.emplace_back(std::move(v));
  }
  std::sort(half.members.begin(), half.members.end());
  half.left_size = half.members.size();
  half.under_size = 1;

  const auto indices = legal_move_indices(f);
  for (const auto idx : indices) {
    if (idx.is_half()) continue;
    FlatPiece piece;
    piece.index = idx;
    piece.target = move_target(a, idx);
    for (const auto& h : half.members) {
      if (h.contains(piece.target)) continue;
      auto g = apply_move(h, a, piece.target);
      const auto caps = build_cap_diagram(g);
      if (matches(caps, f) && caps.contains(Cap{piece.target, a})) {
        piece.members.push_back(std::move(g));
      }
    }
    std::sort(piece.members.begin(), piece.members.end());
    piece.members.erase(std::unique(piece.members.begin(), piece.members.end()),
                        piece.members.end());
    split_counts(piece, a);
    d.pieces.push_back(std::move(piece));
  }
  d.pieces.insert(d.pieces.begin(), std::move(half));
  return d;
}

namespace {

// Depth-first search over candidate tuples from the largest entry down. The
// cap of an entry depends only on larger entries, so each cap is placed as
// soon as its start is chosen and rejected at once if it fails to join an x
// of f to a dot of f.
class OracleSearch {
 public:
  OracleSearch(const WeightFunction& f, int lo, int hi)
      : f_(f), lo_(lo), hi_(hi), r_(static_cast<int>(f.rank())) {
    taken_.assign(static_cast<std::size_t>(hi - lo + 2 * r_ + 3), 0);
    chosen_.reserve(f.rank());
  }

  std::vector<WeightFunction> run() {
    descend(hi_);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  char& taken(int z) { return taken_[static_cast<std::size_t>(z - lo_)]; }

  void descend(int upper) {
    if (static_cast<int>(chosen_.size()) == r_) {
      found_.emplace_back(std::vector<int>(chosen_.rbegin(), chosen_.rend()));
      return;
    }
    const int still_needed = r_ - static_cast<int>(chosen_.size());
    for (int b = upper; b - lo_ + 1 >= still_needed; --b) {
      if (taken(b)) continue;  // end of a cap placed further right
      int e = b + 1;
      while (taken(e)) ++e;
      if (f_.contains(b) == f_.contains(e)) continue;
      taken(b) = 1;
      taken(e) = 1;
      chosen_.push_back(b);
      descend(b - 1);
      chosen_.pop_back();
      taken(b) = 0;
      taken(e) = 0;
    }
  }

  const WeightFunction& f_;
  int lo_;
  int hi_;
  int r_;
  std::vector<char> taken_;
  std::vector<int> chosen_;
  std::vector<WeightFunction> found_;
};

}  // namespace

std::vector<WeightFunction> flat_oracle(const WeightFunction& f, int margin) {
  if (margin < 0) throw std::invalid_argument("oracle margin must be non-negative");
  if (f.empty()) return {WeightFunction{}};
  const int r = static_cast<int>(f.rank());
  return OracleSearch(f, f.front() - 2 * r - margin, f.anchor() + margin).run();
}

std::vector<PieceCount> decomposition_counts(const FlatDecomposition& d) {
  std::vector<PieceCount> out;
  out.reserve(d.pieces.size());
  for (const auto& p : d.pieces) {
    out.push_back({p.index, p.members.size(), p.left_size, p.under_size});
  }
  return out;
}

LmStarCheck lm_star_count_bound_check(const WeightFunction& f) {
  LmStarCheck c;
  c.count = legal_move_indices(f).size();
  c.is_extremal = c.count == f.rank() + 1;
  c.agrees_with_zigzag = c.is_extremal == is_zigzag(f);
  return c;
}

}  // namespace capdiag
