#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "capdiag/catalan.hpp"
#include "capdiag/io.hpp"
#include "capdiag/moves.hpp"
#include "capdiag/render.hpp"
#include "capdiag/sweep.hpp"
#include "capdiag/tally.hpp"

namespace py = pybind11;
using namespace capdiag;

namespace {

using Entries = std::vector<int>;

Entries entries(const WeightFunction& f) { return {f.entries().begin(), f.entries().end()}; }

std::vector<Entries> entries(const std::vector<WeightFunction>& fs) {
  std::vector<Entries> out;
  for (const auto& f : fs) out.push_back(entries(f));
  return out;
}

std::vector<std::pair<int, int>> caps_of(const CapDiagram& d) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : d.caps()) out.emplace_back(c.start, c.end);
  return out;
}

CapDiagram diagram_from(const std::vector<std::pair<int, int>>& caps) {
  std::vector<Cap> cs;
  for (const auto& [s, e] : caps) cs.push_back(Cap{s, e});
  return CapDiagram(std::move(cs));
}

Window window_or_default(const WeightFunction& f, std::optional<int> lo, std::optional<int> hi) {
  auto w = default_window(f);
  if (lo) w.lo = *lo;
  if (hi) w.hi = *hi;
  return w;
}

}  // namespace

PYBIND11_MODULE(_capdiag, m) {
  m.doc() = "cap diagrams, tallies and matching sets of weight functions";

  m.def("cap_diagram", [](const Entries& f) { return caps_of(build_cap_diagram(WeightFunction(f))); },
        py::arg("f"));
  m.def("matches", [](const std::vector<std::pair<int, int>>& caps, const Entries& f) {
    return matches(diagram_from(caps), WeightFunction(f));
  }, py::arg("caps"), py::arg("f"));

  m.def("tally", [](const Entries& f, std::optional<int> lo, std::optional<int> hi) {
    const WeightFunction w(f);
    const auto t = tally(w, window_or_default(w, lo, hi));
    return py::make_tuple(t.window().lo, std::vector<int>(t.values().begin(), t.values().end()));
  }, py::arg("f"), py::arg("lo") = py::none(), py::arg("hi") = py::none(),
     "returns (lo, values) with values[k] the tally at lo + k");
  m.def("is_zigzag", [](const Entries& f) { return is_zigzag(WeightFunction(f)); }, py::arg("f"));

  m.def("legal_moves", [](const Entries& f) {
    std::vector<std::string> out;
    for (const auto i : legal_move_indices(WeightFunction(f))) out.push_back(i.label());
    return out;
  }, py::arg("f"));
  m.def("apply_move", [](const Entries& f, int a, int b) {
    return entries(apply_move(WeightFunction(f), a, b));
  }, py::arg("f"), py::arg("a"), py::arg("b"));

  m.def("flat", [](const Entries& f) { return entries(flat_recursive(WeightFunction(f)).all()); },
        py::arg("f"));
  m.def("flat_oracle", [](const Entries& f, int margin) {
    return entries(flat_oracle(WeightFunction(f), margin));
  }, py::arg("f"), py::arg("margin") = 0);
  m.def("flat_report", [](const Entries& f) {
    return flat_report_json(flat_recursive(WeightFunction(f))).dump();
  }, py::arg("f"), "JSON text of the decomposition report");

  m.def("catalan", &catalan, py::arg("n"));
  m.def("catalan_max_index", &catalan_max_index);
  m.def("arc_system_count", [](int n) { return enumerate_arc_systems(n).size(); }, py::arg("n"));

  m.def("render", [](const Entries& f, const std::string& what, const std::string& style) {
    const WeightFunction w(f);
    RenderRequest req{w, std::nullopt, std::nullopt, std::nullopt};
    if (what == "cap" || what == "all") req.caps = build_cap_diagram(w);
    if (what == "tally" || what == "all") req.tally = tally(w);
    if (what != "wt" && what != "cap" && what != "tally" && what != "all") {
      throw std::invalid_argument("what must be wt, cap, tally or all");
    }
    if (style != "ascii" && style != "svg") throw std::invalid_argument("style must be ascii or svg");
    return render(req, style == "svg" ? RenderStyle::Svg : RenderStyle::Ascii);
  }, py::arg("f"), py::arg("what") = "all", py::arg("style") = "ascii");

  m.def("verify", [](int rank, int window, int jobs, std::optional<double> time_budget) {
    SweepOptions o;
    o.rank = rank;
    o.window = window;
    o.jobs = jobs;
    o.time_budget_seconds = time_budget;
    SweepReport rep;
    {
      py::gil_scoped_release release;
      rep = run_sweep(o);
    }
    return to_json(rep).dump();
  }, py::arg("rank"), py::arg("window"), py::arg("jobs") = 1, py::arg("time_budget") = py::none(),
     "JSON text of the sweep report");
}
