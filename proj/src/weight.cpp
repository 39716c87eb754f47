#include "capdiag/weight.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace capdiag {

WeightFunction::WeightFunction(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1] >= entries_[i]) {
      throw std::invalid_argument("weight function entries must be strictly increasing: " +
                                  to_string());
    }
  }
}

WeightFunction WeightFunction::arithmetic(int start, int step, int count) {
  if (count < 0) throw std::invalid_argument("negative rank");
  std::vector<int> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = start + i * step;
  return WeightFunction(std::move(v));
}

bool WeightFunction::contains(int z) const noexcept {
  return std::binary_search(entries_.begin(), entries_.end(), z);
}

int WeightFunction::front() const {
  if (entries_.empty()) throw std::domain_error("empty weight function has no entries");
  return entries_.front();
}

int WeightFunction::anchor() const {
  if (entries_.empty()) throw std::domain_error("empty weight function has no anchor");
  return entries_.back();
}

WeightFunction WeightFunction::shifted(int s) const {
  auto v = entries_;
  for (auto& x : v) x += s;
  return WeightFunction(std::move(v));
}

WeightFunction WeightFunction::truncated() const {
  if (entries_.empty()) throw std::domain_error("cannot truncate the empty weight function");
  return WeightFunction(std::vector<int>(entries_.begin(), entries_.end() - 1));
}

bool WeightFunction::same_shape(const WeightFunction& other) const noexcept {
  if (rank() != other.rank()) return false;
  if (entries_.empty()) return true;
  const int d = entries_.front() - other.entries_.front();
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] - other.entries_[i] != d) return false;
  }
  return true;
}

std::string WeightFunction::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

WeightFunction parse_weight_function(const std::string& text) {
  std::vector<int> v;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      // "" parses as the empty function; a blank field elsewhere is an error.
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw std::invalid_argument("empty field in weight function '" + text + "'");
    }
    const auto last = token.find_last_not_of(" \t");
    const char* b = token.data() + first;
    const char* e = token.data() + last + 1;
    int value = 0;
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || ptr != e) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    v.push_back(value);
  }
  if (!text.empty() && text.back() == ',') {
    throw std::invalid_argument("trailing comma in weight function '" + text + "'");
  }
  return WeightFunction(std::move(v));
}

CapDiagram::CapDiagram(std::vector<Cap> caps) {
  std::sort(caps.begin(), caps.end());
  if (auto why = violation(caps)) throw std::invalid_argument(*why);
  caps_ = std::move(caps);
}

std::optional<std::string> CapDiagram::violation(std::span<const Cap> caps) {
  std::vector<Cap> sorted(caps.begin(), caps.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ends;
  for (const auto& c : sorted) {
    const auto tag = "(" + std::to_string(c.start) + "," + std::to_string(c.end) + ")";
    if (c.start >= c.end) return "cap " + tag + " must start left of its end";
    if ((c.end - c.start) % 2 == 0) return "cap " + tag + " has an odd number of interior points";
    ends.push_back(c.start);
    ends.push_back(c.end);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    return std::string("cap endpoints are not distinct");
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const Cap& p = sorted[i];
      const Cap& q = sorted[j];  // p.start < q.start
      const bool disjoint = q.start > p.end;
      const bool nested = q.end < p.end;
      if (!disjoint && !nested) return std::string("caps cross");
    }
  }
  // Saturation: every interior integer of a cap is an endpoint.
  for (const auto& c : sorted) {
    for (int z = c.start + 1; z < c.end; ++z) {
      if (!std::binary_search(ends.begin(), ends.end(), z)) {
        return "integer " + std::to_string(z) + " is left free inside a cap";
      }
    }
  }
  return std::nullopt;
}

bool CapDiagram::contains(Cap c) const noexcept {
  return std::binary_search(caps_.begin(), caps_.end(), c);
}

int CapDiagram::nesting_depth(Cap c) const noexcept {
  return static_cast<int>(std::count_if(caps_.begin(), caps_.end(), [&](const Cap& o) {
    return o.start < c.start && c.end < o.end;
  }));
}

int CapDiagram::height(Cap c) const noexcept {
  int h = 1;
  for (const auto& o : caps_) {
    if (c.start < o.start && o.end < c.end) h = std::max(h, height(o) + 1);
  }
  return h;
}

CapDiagram build_cap_diagram(const WeightFunction& f) {
  const auto e = f.entries();
  if (e.empty()) return {};
  const int r = static_cast<int>(e.size());
  const int lo = e.front();
  // Every end lies within 2r of the anchor.
  const int span = e.back() - lo + 2 * r + 2;
  std::vector<char> taken(static_cast<std::size_t>(span), 0);
  for (int x : e) taken[static_cast<std::size_t>(x - lo)] = 1;

  std::vector<Cap> caps(e.size());
  for (int i = r - 1; i >= 0; --i) {
    int z = e[static_cast<std::size_t>(i)] + 1;
    while (taken[static_cast<std::size_t>(z - lo)]) ++z;
    taken[static_cast<std::size_t>(z - lo)] = 1;
    caps[static_cast<std::size_t>(i)] = Cap{e[static_cast<std::size_t>(i)], z};
  }
  return CapDiagram(CapDiagram::Unchecked{}, std::move(caps));
}

bool matches(const CapDiagram& c, const WeightFunction& f) {
  if (c.size() != f.rank()) return false;
  std::size_t covered = 0;
  for (const auto& cap : c.caps()) {
    const bool s = f.contains(cap.start);
    const bool t = f.contains(cap.end);
    if (s == t) return false;
    ++covered;
  }
  // Endpoints are distinct, so #f caps each touching one entry cover f.
  return covered == f.rank();
}

}  // namespace capdiag
