#include "capdiag/io.hpp"

#include <sstream>

#include "capdiag/catalan.hpp"

namespace capdiag {

using nlohmann::json;

json to_json(const WeightFunction& f) {
  json j = json::array();
  for (int x : f.entries()) j.push_back(x);
  return j;
}

json to_json(const CapDiagram& c) {
  json j = json::array();
  for (const auto& cap : c.caps()) j.push_back({cap.start, cap.end});
  return j;
}

json to_json(const SweepReport& r) {
  json j;
  j["rank"] = r.rank;
  j["window"] = r.window;
  j["normalization"] = "anchor a_r = " + std::to_string(2 * r.rank) + ", a_1 >= " +
                       std::to_string(2 * r.rank - r.window);
  j["candidates"] = r.candidates;
  j["tested"] = r.tested;
  j["complete"] = r.complete;
  j["max_flat"] = r.max_flat;
  j["catalan_bound"] = catalan(r.rank + 1);
  j["min_flat"] = r.min_flat;
  j["max_lm_star"] = r.max_lm_star;
  j["oracle_checked"] = r.oracle_checked;
  j["stability_checked"] = r.stability_checked;
  j["extremal"] = json::array();
  for (const auto& f : r.extremal) j["extremal"].push_back(to_json(f));
  j["minimal"] = json::array();
  for (const auto& f : r.minimal) j["minimal"].push_back(to_json(f));
  j["violations"] = r.violations;
  j["seconds"] = r.seconds;
  return j;
}

namespace {

struct Bounds {
  std::size_t size;
  std::uint64_t upper;
  std::size_t lower;
  bool extremal;
  bool minimal;
};

Bounds bounds_of(const FlatDecomposition& d) {
  const auto r = d.base.rank();
  const auto n = d.total();
  const auto upper = catalan(static_cast<int>(r) + 1);
  return {n, upper, r + 1, n == upper, n == r + 1};
}

}  // namespace

json flat_report_json(const FlatDecomposition& d) {
  const auto b = bounds_of(d);
  json j;
  j["f"] = to_json(d.base);
  j["rank"] = d.base.rank();
  j["cap_diagram"] = to_json(build_cap_diagram(d.base));
  j["flat"] = json::array();
  for (const auto& g : d.all()) j["flat"].push_back(to_json(g));
  j["decomposition"] = json::object();
  for (const auto& p : d.pieces) {
    json piece;
    piece["target"] = p.target;
    piece["size"] = p.members.size();
    piece["left"] = p.left_size;
    piece["under"] = p.under_size;
    piece["members"] = json::array();
    for (const auto& g : p.members) piece["members"].push_back(to_json(g));
    j["decomposition"][p.index.label()] = std::move(piece);
  }
  j["count"] = b.size;
  j["catalan_bound"] = b.upper;
  j["lower_bound"] = b.lower;
  j["extremal"] = b.extremal;
  j["minimal"] = b.minimal;
  return j;
}

std::string flat_report_text(const FlatDecomposition& d) {
  const auto b = bounds_of(d);
  const auto r = d.base.rank();
  std::ostringstream s;
  s << "f = " << d.base.to_string() << "  (r = " << r << ")\n";
  s << "flat f:\n";
  for (const auto& g : d.all()) s << "  " << g.to_string() << '\n';
  if (!d.pieces.empty()) s << "decomposition:\n";
  for (const auto& p : d.pieces) {
    s << "  " << p.index.label() << ": target " << p.target << ", size " << p.members.size()
      << " = " << p.left_size << " x " << p.under_size << '\n';
  }
  s << "|flat f| = " << b.size << '\n';
  s << b.size << " ≤ C_" << r + 1 << " = " << b.upper << (b.extremal ? " (extremal)" : "") << '\n';
  s << b.size << " ≥ r+1 = " << b.lower << (b.minimal ? " (minimal)" : "") << '\n';
  return s.str();
}

}  // namespace capdiag
