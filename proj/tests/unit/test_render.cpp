#include <doctest.h>

#include <stdexcept>

#include "capdiag/render.hpp"

using namespace capdiag;

TEST_CASE("weight line only") {
  RenderRequest req{WeightFunction({2, 4}), std::nullopt, std::nullopt, std::nullopt};
  CHECK(default_render_window(req) == Window{0, 4});
  CHECK(render(req, RenderStyle::Ascii) ==
        "# f=(2,4) window=[0,4]\n"
        "    f ..x.x\n"
        "    z 01234\n");
}

TEST_CASE("empty weight renders all dots") {
  RenderRequest req{WeightFunction(), std::nullopt, std::nullopt, std::nullopt};
  CHECK(render(req, RenderStyle::Ascii) ==
        "# f=() window=[0,4]\n"
        "    f .....\n"
        "    z 01234\n");
}

TEST_CASE("caps are stacked by height") {
  RenderRequest req{WeightFunction({2, 4}), CapDiagram({{1, 2}, {3, 4}}), std::nullopt,
                    Window{1, 5}};
  CHECK(render(req, RenderStyle::Ascii) ==
        "# f=(2,4) window=[1,5]\n"
        "      ++++\n"
        "    f .x.x.\n"
        "    z 12345\n");

  RenderRequest nested{WeightFunction({2, 4}), CapDiagram({{1, 4}, {2, 3}}), std::nullopt,
                       Window{1, 5}};
  CHECK(render(nested, RenderStyle::Ascii) ==
        "# f=(2,4) window=[1,5]\n"
        "      +--+\n"
        "      |++|\n"
        "    f .x.x.\n"
        "    z 12345\n");
}

TEST_CASE("tally plot") {
  const WeightFunction f({1, 2, 3, 7, 9});
  RenderRequest req{f, std::nullopt, tally(f, Window{0, 9}), Window{0, 9}};
  CHECK(render(req, RenderStyle::Ascii) ==
        "# f=(1,2,3,7,9) window=[0,9]\n"
        "    f .xxx...x.x\n"
        "    z 0123456789\n"
        "  3 |    o\n"
        "  2 |   o o\n"
        "  1 |  o   o o o\n"
        "  0 | o-----o-o-\n");
}

TEST_CASE("render is deterministic and validates the window") {
  const WeightFunction f({1, 2, 3, 7, 9});
  RenderRequest req{f, build_cap_diagram(f), tally(f), std::nullopt};
  CHECK(render(req, RenderStyle::Ascii) == render(req, RenderStyle::Ascii));
  CHECK(render(req, RenderStyle::Svg) == render(req, RenderStyle::Svg));
  CHECK(render(req, RenderStyle::Svg).rfind("<svg", 0) == 0);

  RenderRequest clipped{f, build_cap_diagram(f), std::nullopt, Window{0, 9}};
  CHECK_THROWS_AS(render(clipped, RenderStyle::Ascii), std::invalid_argument);  // cap (9,10)
  RenderRequest outside{f, std::nullopt, std::nullopt, Window{2, 9}};
  CHECK_THROWS_AS(render(outside, RenderStyle::Svg), std::invalid_argument);
}
