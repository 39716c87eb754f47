#pragma once

#include <string>

#include <json.hpp>

#include "capdiag/moves.hpp"
#include "capdiag/sweep.hpp"

namespace capdiag {

// Weight functions serialize as integer arrays, caps as [start, end] pairs,
// and decomposition pieces are keyed "half" / "step-i".
nlohmann::json to_json(const WeightFunction& f);
nlohmann::json to_json(const CapDiagram& c);
nlohmann::json to_json(const SweepReport& r);

/// Full `flat` report: the set, its decomposition, and both Catalan-style
/// bounds.
nlohmann::json flat_report_json(const FlatDecomposition& d);
std::string flat_report_text(const FlatDecomposition& d);

}  // namespace capdiag
