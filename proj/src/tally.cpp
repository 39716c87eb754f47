#include "capdiag/tally.hpp"

#include <stdexcept>
#include <string>

namespace capdiag {

TallyProfile::TallyProfile(WeightFunction f, Window window, std::vector<int> values)
    : f_(std::move(f)), window_(window), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != window_.width()) {
    throw std::invalid_argument("tally values do not fill the window");
  }
}

int TallyProfile::value(int z) const {
  if (!window_.contains(z)) {
    throw std::out_of_range("position " + std::to_string(z) + " outside tally window [" +
                            std::to_string(window_.lo) + "," + std::to_string(window_.hi) + "]");
  }
  return values_[static_cast<std::size_t>(z - window_.lo)];
}

std::string_view to_string(PointClass c) noexcept {
  switch (c) {
    case PointClass::LocalMax: return "max";
    case PointClass::LocalMin: return "min";
    case PointClass::SlopeUp: return "up";
    case PointClass::SlopeDown: return "down";
  }
  return "?";
}

Window default_window(const WeightFunction& f) {
  if (f.empty()) throw std::domain_error("tally of the empty weight function is undefined");
  const int r = static_cast<int>(f.rank());
  return {f.front() - 2 * r - 1, f.anchor() + 2};
}

TallyProfile tally(const WeightFunction& f, Window window) {
  if (f.empty()) throw std::domain_error("tally of the empty weight function is undefined");
  if (!window.contains(Window{f.front() - 1, f.anchor()})) {
    throw std::invalid_argument("tally window must contain [a_1 - 1, a_r]");
  }
  std::vector<int> values(static_cast<std::size_t>(window.width()));
  const int a = f.anchor();
  auto at = [&](int z) -> int& { return values[static_cast<std::size_t>(z - window.lo)]; };
  at(a) = 1;
  for (int z = a + 1; z <= window.hi; ++z) at(z) = at(z - 1) + (f.contains(z) ? 1 : -1);
  for (int z = a - 1; z >= window.lo; --z) at(z) = at(z + 1) - (f.contains(z + 1) ? 1 : -1);
  return TallyProfile(f, window, std::move(values));
}

std::vector<int> zeros_left_of_anchor(const TallyProfile& t) {
  const auto& f = t.weight();
  const Window w = t.window();
  if (w.lo >= f.front() || t.value(w.lo) <= 0) {
    throw std::invalid_argument("tally window does not reach far enough left to certify all zeros");
  }
  std::vector<int> zeros;
  for (int z = w.lo; z <= f.anchor(); ++z) {
    if (t.value(z) == 0 && !f.contains(z)) zeros.push_back(z);
  }
  return zeros;
}

PointClass classify_point(const TallyProfile& t, int c) {
  const Window w = t.window();
  if (!w.contains(c - 1) || !w.contains(c + 1)) {
    throw std::out_of_range("point " + std::to_string(c) + " needs both neighbours in the window");
  }
  const int left = t.value(c) - t.value(c - 1);
  const int right = t.value(c + 1) - t.value(c);
  if (left > 0) return right > 0 ? PointClass::SlopeUp : PointClass::LocalMax;
  return right > 0 ? PointClass::LocalMin : PointClass::SlopeDown;
}

bool is_zigzag(const WeightFunction& f) {
  if (f.empty()) throw std::domain_error("zigzag shape needs rank >= 1");
  const auto e = f.entries();
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] - e[i - 1] != 2) return false;
  }
  return true;
}

}  // namespace capdiag
