#include <doctest.h>

#include <random>

#include "capdiag/tally.hpp"
#include "generators.hpp"

using namespace capdiag;

namespace {

std::vector<int> values_on(const TallyProfile& t, int lo, int hi) {
  std::vector<int> v;
  for (int z = lo; z <= hi; ++z) v.push_back(t.value(z));
  return v;
}

}  // namespace

TEST_CASE("tally of the worked example") {
  const auto t = tally(WeightFunction({1, 2, 3, 7, 9}), Window{0, 9});
  CHECK(values_on(t, 0, 9) == std::vector<int>{0, 1, 2, 3, 2, 1, 0, 1, 0, 1});
}

TEST_CASE("tally small cases") {
  // Backward from T(4) = 1: 4 is x so T(3) = 0, 3 is dot so T(2) = 1, ...
  const auto t = tally(WeightFunction({2, 4}), Window{0, 4});
  CHECK(values_on(t, 0, 4) == std::vector<int>{1, 0, 1, 0, 1});
  const auto u = tally(WeightFunction({1}), Window{0, 1});
  CHECK(u.value(1) == 1);
  CHECK(u.value(0) == 0);
}

TEST_CASE("tally errors") {
  CHECK_THROWS_AS(tally(WeightFunction(), Window{0, 3}), std::domain_error);
  CHECK_THROWS_AS(tally(WeightFunction({2, 4}), Window{2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(tally(WeightFunction({2, 4}), Window{1, 3}), std::invalid_argument);
  const auto t = tally(WeightFunction({2, 4}), Window{1, 4});
  CHECK_THROWS_AS(static_cast<void>(t.value(5)), std::out_of_range);
}

TEST_CASE("default window") {
  CHECK(default_window(WeightFunction({1, 2, 3, 7, 9})) == Window{-10, 11});
  CHECK_THROWS_AS(default_window(WeightFunction()), std::domain_error);
}

TEST_CASE("zeros left of the anchor") {
  CHECK(zeros_left_of_anchor(tally(WeightFunction({2, 4}))) == std::vector<int>{1, 3});
  CHECK(zeros_left_of_anchor(tally(WeightFunction({1, 2, 3, 7, 9}))) == std::vector<int>{0, 6, 8});
  CHECK(zeros_left_of_anchor(tally(WeightFunction({1}))) == std::vector<int>{0});
  // q = (1,2,3): the only dot at height zero is 1 - r = -2.
  CHECK(zeros_left_of_anchor(tally(WeightFunction({1, 2, 3}))) == std::vector<int>{-2});
  // Window that does not reach past the leftmost zero.
  CHECK_THROWS_AS(zeros_left_of_anchor(tally(WeightFunction({2, 4}), Window{1, 4})),
                  std::invalid_argument);
}

TEST_CASE("point classes on the worked example") {
  const auto t = tally(WeightFunction({1, 2, 3, 7, 9}));
  CHECK(classify_point(t, 3) == PointClass::LocalMax);
  CHECK(classify_point(t, 2) == PointClass::SlopeUp);
  CHECK(classify_point(t, 6) == PointClass::LocalMin);
  CHECK(classify_point(t, 5) == PointClass::SlopeDown);
  CHECK(to_string(PointClass::LocalMin) == "min");
  const auto w = t.window();
  CHECK_THROWS_AS(classify_point(t, w.lo), std::out_of_range);
  CHECK_THROWS_AS(classify_point(t, w.hi), std::out_of_range);
}

TEST_CASE("zigzag shapes") {
  CHECK(is_zigzag(WeightFunction({2, 4, 6})));
  CHECK(is_zigzag(WeightFunction({5, 7})));
  CHECK(is_zigzag(WeightFunction({3})));
  CHECK_FALSE(is_zigzag(WeightFunction({1, 2, 3, 7, 9})));
  CHECK_FALSE(is_zigzag(WeightFunction({3, 4})));
  CHECK_THROWS_AS(is_zigzag(WeightFunction()), std::domain_error);
}

TEST_CASE("tally properties over all small weight functions") {
  for (int r = 1; r <= 5; ++r) {
    for (const auto& f : testing::all_weights(r, 0, 11)) {
      INFO(f.to_string());
      const auto t = tally(f);
      const Window w = t.window();
      const int a = f.anchor();
      CHECK(t.value(a) == 1);
      for (int z = w.lo + 1; z <= w.hi; ++z) {
        CHECK(t.value(z) - t.value(z - 1) == (f.contains(z) ? 1 : -1));
      }

      // Partition: x positions are maxima or up-slopes, dots are minima or
      // down-slopes.
      for (int c = f.front() - 1; c < a; ++c) {
        const auto k = classify_point(t, c);
        const bool up = k == PointClass::LocalMax || k == PointClass::SlopeUp;
        CHECK(up == f.contains(c));
      }

      // Extrema alternate along the whole window.
      int last = 0;  // +1 after a max, -1 after a min
      int maxima_positive = 0;
      for (int c = w.lo + 1; c < w.hi; ++c) {
        const auto k = classify_point(t, c);
        if (k == PointClass::LocalMax) {
          CHECK(last != 1);
          last = 1;
          if (t.value(c) >= 1) ++maxima_positive;
        } else if (k == PointClass::LocalMin) {
          CHECK(last != -1);
          last = -1;
        }
      }

      // A dip to -1 or below costs a maximum.
      bool dips = false;
      for (int z = f.front() - 1; z <= a; ++z) dips = dips || t.value(z) <= -1;
      if (dips) CHECK(maxima_positive <= r - 1);

      // Zigzag iff the zeros are a_r - 1, a_r - 3, ..., a_r - 2r + 1.
      std::vector<int> expected;
      for (int k = r; k >= 1; --k) expected.push_back(a - 2 * k + 1);
      CHECK((zeros_left_of_anchor(t) == expected) == is_zigzag(f));
    }
  }
}

TEST_CASE("tally is shift equivariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    const auto f = testing::random_weight(rng, r, -8, 18);
    const int s = static_cast<int>(rng() % 31) - 15;
    const auto t = tally(f);
    const auto u = tally(f.shifted(s));
    for (int z = t.window().lo; z <= t.window().hi; ++z) CHECK(u.value(z + s) == t.value(z));
  }
}
