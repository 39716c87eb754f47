#include "capdiag/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "capdiag/catalan.hpp"
#include "capdiag/moves.hpp"
#include "capdiag/tally.hpp"

namespace capdiag {

std::vector<WeightFunction> sweep_functions(int rank, int window) {
  if (rank < 1) throw std::invalid_argument("sweep rank must be at least 1");
  const int anchor = 2 * rank;
  const int lo = anchor - window;
  std::vector<WeightFunction> out;
  // Choose rank - 1 entries from [lo, anchor - 1].
  std::vector<int> pick(static_cast<std::size_t>(rank - 1));
  const int pool = anchor - lo;
  if (pool < rank - 1) return out;
  for (int i = 0; i < rank - 1; ++i) pick[static_cast<std::size_t>(i)] = lo + i;
  for (;;) {
    auto v = pick;
    v.push_back(anchor);
    out.emplace_back(std::move(v));
    int i = rank - 2;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == anchor - 1 - (rank - 2 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < rank - 1; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

namespace {

bool is_consecutive(const WeightFunction& f) {
  const auto e = f.entries();
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] != e[i - 1] + 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> check_function(const WeightFunction& f, bool with_oracle,
                                        bool with_stability) {
  std::vector<std::string> bad;
  const std::string tag = " f=" + f.to_string();
  auto fail = [&](const std::string& what) { bad.push_back(what + tag); };

  const auto r = f.rank();
  const int a = f.anchor();
  const auto d = flat_recursive(f);
  const auto all = d.all();
  const bool zigzag = is_zigzag(f);

  // Pieces are disjoint and cover the set; sizes factor.
  std::size_t sum = 0;
  std::set<WeightFunction> seen;
  for (const auto& piece : d.pieces) {
    sum += piece.members.size();
    for (const auto& g : piece.members) {
      if (!seen.insert(g).second) fail("pieces: " + g.to_string() + " lies in two pieces");
      const auto caps = build_cap_diagram(g);
      if (!matches(caps, f)) fail("pieces: " + g.to_string() + " does not match");
      if (!caps.contains(Cap{piece.target, piece.index.is_half() ? a + 1 : a})) {
        fail("pieces: " + g.to_string() + " lacks the cap of " + piece.index.label());
      }
    }
    if (piece.members.size() != piece.left_size * piece.under_size) {
      fail("pieces: " + piece.index.label() + " is not a product");
    }
    if (!piece.index.is_half()) {
      const int i = piece.index.step();
      const auto ri = static_cast<int>(r);
      if (piece.left_size > catalan(ri - i + 1) || piece.under_size > catalan(i - 1)) {
        fail("factor-bound: " + piece.index.label() + " factor exceeds its Catalan bound");
      }
    }
  }
  if (sum != all.size()) fail("pieces: piece sizes do not add up");

  // Half piece mirrors the truncated set.
  const auto& half = d.pieces.front();
  if (half.members.size() != flat_recursive(f.truncated()).total()) {
    fail("half-piece: half piece and truncated set differ in size");
  }
  for (const auto& h : half.members) {
    if (h.anchor() != a) fail("half-piece: " + h.to_string() + " does not end at the anchor");
  }

  if (with_oracle && flat_oracle(f) != all) fail("oracle: recursive and brute force sets differ");
  if (with_stability && flat_oracle(f, 5) != flat_oracle(f)) {
    fail("stability: oracle output depends on the window margin");
  }

  // Upper bound.
  const auto bound = catalan(static_cast<int>(r) + 1);
  if (all.size() > bound) fail("upper-bound: |flat f| exceeds C_{r+1}");
  if ((all.size() == bound) != zigzag) fail("upper-bound: equality case is not the zigzag");

  // Index bound.
  const auto lm = lm_star_count_bound_check(f);
  if (lm.count > r + 1) fail("index-bound: |LM* f| exceeds r+1");
  if (!lm.agrees_with_zigzag) fail("index-bound: equality case is not the zigzag");

  // Lower bound.
  if (all.size() < r + 1) fail("lower-bound: |flat f| below r+1");
  if ((all.size() == r + 1) != is_consecutive(f)) fail("lower-bound: equality case is not consecutive");

  // Partition of integers by local shape.
  const auto t = tally(f);
  for (int c = f.front() - 1; c < a; ++c) {
    const auto cls = classify_point(t, c);
    const bool up = cls == PointClass::LocalMax || cls == PointClass::SlopeUp;
    if (up != f.contains(c)) fail("partition: wrong class at " + std::to_string(c));
  }

  // Zigzag shape versus zeros.
  const auto zeros = zeros_left_of_anchor(t);
  std::vector<int> zz;
  for (int k = static_cast<int>(r); k >= 1; --k) zz.push_back(a - 2 * k + 1);
  if ((zeros == zz) != zigzag) fail("zigzag: zero set does not characterise the zigzag");

  return bad;
}

SweepReport run_sweep(const SweepOptions& opts) {
  if (opts.rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (opts.rank > opts.max_rank) {
    throw std::invalid_argument("rank " + std::to_string(opts.rank) + " exceeds the maximum " +
                                std::to_string(opts.max_rank));
  }
  if (opts.window < 2 * opts.rank) throw std::invalid_argument("window must be at least 2*rank");
  if (opts.jobs < 1) throw std::invalid_argument("jobs must be positive");

  const auto start = std::chrono::steady_clock::now();
  const auto fs = sweep_functions(opts.rank, opts.window);

  std::vector<char> oracle(fs.size(), opts.rank <= opts.oracle_full_max_rank ? 1 : 0);
  if (opts.rank > opts.oracle_full_max_rank) {
    std::vector<std::size_t> idx(fs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(opts.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t i = 0; i < std::min(opts.oracle_samples, idx.size()); ++i) oracle[idx[i]] = 1;
  }
  const bool stability = opts.rank <= opts.stability_max_rank;

  struct Result {
    bool done = false;
    std::size_t flat = 0;
    std::size_t lm_star = 0;
    std::vector<std::string> violations;
  };
  std::vector<Result> results(fs.size());
  std::atomic<bool> out_of_time{false};
  auto over_budget = [&] {
    if (!opts.time_budget_seconds) return false;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    return dt.count() > *opts.time_budget_seconds;
  };

  auto worker = [&](std::size_t first) {
    for (std::size_t i = first; i < fs.size(); i += static_cast<std::size_t>(opts.jobs)) {
      if (out_of_time.load(std::memory_order_relaxed)) return;
      if (over_budget()) {
        out_of_time = true;
        return;
      }
      auto& res = results[i];
      res.violations = check_function(fs[i], oracle[i] != 0, stability);
      res.flat = flat_recursive(fs[i]).total();
      res.lm_star = legal_move_indices(fs[i]).size();
      res.done = true;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < opts.jobs; ++j) pool.emplace_back(worker, static_cast<std::size_t>(j));
    worker(0);
  }

  SweepReport rep;
  rep.rank = opts.rank;
  rep.window = opts.window;
  rep.candidates = fs.size();
  rep.min_flat = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& res = results[i];
    if (!res.done) {
      rep.complete = false;
      continue;
    }
    ++rep.tested;
    if (oracle[i]) ++rep.oracle_checked;
    if (stability) ++rep.stability_checked;
    rep.violations.insert(rep.violations.end(), res.violations.begin(), res.violations.end());
    rep.max_lm_star = std::max(rep.max_lm_star, res.lm_star);
    if (res.flat > rep.max_flat) {
      rep.max_flat = res.flat;
      rep.extremal.clear();
    }
    if (res.flat == rep.max_flat) rep.extremal.push_back(fs[i]);
    if (res.flat < rep.min_flat) {
      rep.min_flat = res.flat;
      rep.minimal.clear();
    }
    if (res.flat == rep.min_flat) rep.minimal.push_back(fs[i]);
  }
  if (rep.tested == 0) rep.min_flat = 0;

  if (rep.complete) {
    const int r = opts.rank;
    const auto p = WeightFunction::arithmetic(2, 2, r);
    const auto q = WeightFunction::arithmetic(r + 1, 1, r);
    if (rep.max_flat != catalan(r + 1)) rep.violations.push_back("upper-bound: maximum is not C_{r+1}");
    if (rep.extremal != std::vector<WeightFunction>{p}) {
      rep.violations.push_back("upper-bound: maximum not attained exactly at " + p.to_string());
    }
    if (rep.min_flat != static_cast<std::size_t>(r + 1)) {
      rep.violations.push_back("lower-bound: minimum is not r+1");
    }
    if (rep.minimal != std::vector<WeightFunction>{q}) {
      rep.violations.push_back("lower-bound: minimum not attained exactly at " + q.to_string());
    }
    if (rep.max_lm_star > static_cast<std::size_t>(r + 1)) {
      rep.violations.push_back("index-bound: |LM* f| exceeds r+1");
    }
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  rep.seconds = dt.count();
  return rep;
}

}  // namespace capdiag
