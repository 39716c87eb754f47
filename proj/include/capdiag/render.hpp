#pragma once

#include <optional>
#include <string>

#include "capdiag/tally.hpp"
#include "capdiag/weight.hpp"

namespace capdiag {

enum class RenderStyle { Ascii, Svg };

struct RenderRequest {
  WeightFunction weight;
  std::optional<CapDiagram> caps;
  std::optional<TallyProfile> tally;
  /// Defaults to default_render_window().
  std::optional<Window> window;
};

/// Smallest window holding [0, 4], every entry, every cap endpoint and the
/// tally window, padded by one on the left of the leftmost drawn point.
Window default_render_window(const RenderRequest& req);

/// Deterministic picture of the request. ASCII: one column per integer, caps
/// above the number line stacked by height, tally as a point plot below it.
/// Throws std::invalid_argument if anything drawn falls outside the window.
std::string render(const RenderRequest& req, RenderStyle style);

}  // namespace capdiag
