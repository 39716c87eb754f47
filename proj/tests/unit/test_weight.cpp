#include <doctest.h>

#include <random>

#include "capdiag/weight.hpp"
#include "generators.hpp"

using namespace capdiag;

TEST_CASE("weight function rejects non-increasing entries") {
  CHECK_THROWS_AS(WeightFunction({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(WeightFunction({3, 1}), std::invalid_argument);
  CHECK_NOTHROW(WeightFunction({-3, 0, 7}));
  CHECK(WeightFunction().rank() == 0);
  CHECK_THROWS_AS(static_cast<void>(WeightFunction().anchor()), std::domain_error);
}

TEST_CASE("membership and shape helpers") {
  const WeightFunction f({1, 2, 3, 7, 9});
  CHECK(f.contains(7));
  CHECK_FALSE(f.contains(8));
  CHECK(f.front() == 1);
  CHECK(f.anchor() == 9);
  CHECK(f.truncated() == WeightFunction({1, 2, 3, 7}));
  CHECK(f.shifted(-1) == WeightFunction({0, 1, 2, 6, 8}));
  CHECK(f.same_shape(f.shifted(5)));
  CHECK_FALSE(f.same_shape(WeightFunction({1, 2, 3, 7, 10})));
  CHECK(WeightFunction::arithmetic(2, 2, 3) == WeightFunction({2, 4, 6}));
  CHECK(f.to_string() == "(1,2,3,7,9)");
}

TEST_CASE("parse weight function") {
  CHECK(parse_weight_function("2,4") == WeightFunction({2, 4}));
  CHECK(parse_weight_function(" -1, 3 ,8") == WeightFunction({-1, 3, 8}));
  CHECK(parse_weight_function("").empty());
  CHECK(parse_weight_function("  ").empty());
  CHECK_THROWS_AS(parse_weight_function("2,,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_function("2,4,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_function("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_function("4,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_function("1.5"), std::invalid_argument);
}

TEST_CASE("cap diagram validation") {
  CHECK_NOTHROW(CapDiagram({{1, 4}, {2, 3}}));
  CHECK_NOTHROW(CapDiagram({{1, 2}, {5, 6}}));
  CHECK_THROWS_AS(CapDiagram({{1, 3}, {2, 4}}), std::invalid_argument);  // crossing
  CHECK_THROWS_AS(CapDiagram({{1, 3}}), std::invalid_argument);          // even span
  CHECK_THROWS_AS(CapDiagram({{1, 6}, {2, 3}}), std::invalid_argument);  // 4, 5 free
  CHECK_THROWS_AS(CapDiagram({{1, 2}, {2, 3}}), std::invalid_argument);  // shared end
  CHECK_THROWS_AS(CapDiagram({{3, 2}}), std::invalid_argument);
  const CapDiagram d({{1, 6}, {2, 5}, {3, 4}});
  CHECK(d.height(Cap{1, 6}) == 3);
  CHECK(d.nesting_depth(Cap{3, 4}) == 2);
}

TEST_CASE("build_cap_diagram worked examples") {
  CHECK(build_cap_diagram(WeightFunction({2, 4})) == CapDiagram({{2, 3}, {4, 5}}));
  CHECK(build_cap_diagram(WeightFunction()).size() == 0);
  // Right to left: 9->10, 7->8, 3->4, 2->5, 1->6.
  CHECK(build_cap_diagram(WeightFunction({1, 2, 3, 7, 9})) ==
        CapDiagram({{1, 6}, {2, 5}, {3, 4}, {7, 8}, {9, 10}}));
  CHECK(build_cap_diagram(WeightFunction({1, 2})) == CapDiagram({{1, 4}, {2, 3}}));
}

TEST_CASE("matches worked examples") {
  const WeightFunction f({2, 4});
  CHECK(matches(CapDiagram({{1, 2}, {3, 4}}), f));
  CHECK(matches(CapDiagram({{1, 2}, {4, 5}}), f));
  CHECK_FALSE(matches(CapDiagram({{5, 6}, {7, 8}}), f));
  CHECK_FALSE(matches(CapDiagram({{1, 2}}), f));                  // too few caps
  CHECK(matches(CapDiagram({{1, 4}, {2, 3}}), f));
  CHECK_FALSE(matches(CapDiagram({{0, 1}, {2, 3}}), f));  // (0,1) joins two dots
  CHECK_FALSE(matches(CapDiagram({{2, 3}, {4, 7}, {5, 6}}), f));
  CHECK(matches(CapDiagram(), WeightFunction()));
}

TEST_CASE("built cap diagrams satisfy the invariants and match their own weight") {
  // Every f with r <= 6 and entries in a width-14 window.
  for (int r = 0; r <= 6; ++r) {
    for (const auto& f : testing::all_weights(r, 0, 13)) {
      const auto d = build_cap_diagram(f);
      const auto caps = d.caps();
      INFO(f.to_string());
      REQUIRE_FALSE(CapDiagram::violation(caps).has_value());
      CHECK(matches(d, f));
      for (const auto& c : caps) CHECK(f.contains(c.start));
    }
  }
}

TEST_CASE("cap diagrams are shift equivariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    const auto f = testing::random_weight(rng, r, -10, 20);
    const int s = static_cast<int>(rng() % 21) - 10;
    std::vector<Cap> moved;
    const auto d = build_cap_diagram(f);
    for (const auto& c : d.caps()) moved.push_back({c.start + s, c.end + s});
    CHECK(build_cap_diagram(f.shifted(s)) == CapDiagram(moved));
  }
}
