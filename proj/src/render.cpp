#include "capdiag/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace capdiag {

namespace {

constexpr int kGutter = 6;
constexpr int kCell = 20;    // svg pixels per integer
constexpr int kMargin = 20;  // svg border

std::string gutter(const std::string& label) {
  std::string g(static_cast<std::size_t>(kGutter), ' ');
  const auto n = std::min<std::size_t>(label.size(), kGutter - 1);
  g.replace(kGutter - 1 - n, n, label.substr(0, n));
  return g;
}

void rtrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

void check_inside(const RenderRequest& req, Window w) {
  for (int x : req.weight.entries()) {
    if (!w.contains(x)) {
      throw std::invalid_argument("entry " + std::to_string(x) + " lies outside the render window");
    }
  }
  if (req.caps) {
    for (const auto& c : req.caps->caps()) {
      if (!w.contains(c.start) || !w.contains(c.end)) {
        throw std::invalid_argument("cap (" + std::to_string(c.start) + "," +
                                    std::to_string(c.end) + ") lies outside the render window");
      }
    }
  }
}

int max_height(const CapDiagram& d) {
  int h = 0;
  for (const auto& c : d.caps()) h = std::max(h, d.height(c));
  return h;
}

std::string render_ascii(const RenderRequest& req, Window w) {
  const auto width = static_cast<std::size_t>(w.width());
  auto col = [&](int z) { return static_cast<std::size_t>(z - w.lo); };
  std::vector<std::string> lines;
  lines.push_back("# f=" + req.weight.to_string() + " window=[" + std::to_string(w.lo) + "," +
                  std::to_string(w.hi) + "]");

  if (req.caps && req.caps->size() > 0) {
    const auto& d = *req.caps;
    for (int k = max_height(d); k >= 1; --k) {
      std::string row(width, ' ');
      for (const auto& c : d.caps()) {
        const int h = d.height(c);
        if (h < k) continue;
        if (h == k) {
          for (int z = c.start + 1; z < c.end; ++z) row[col(z)] = '-';
          row[col(c.start)] = '+';
          row[col(c.end)] = '+';
        } else {
          row[col(c.start)] = '|';
          row[col(c.end)] = '|';
        }
      }
      lines.push_back(gutter("") + row);
    }
  }

  std::string wt(width, '.');
  for (int x : req.weight.entries()) wt[col(x)] = 'x';
  lines.push_back(gutter("f") + wt);

  std::string digits(width, ' ');
  for (int z = w.lo; z <= w.hi; ++z) digits[col(z)] = static_cast<char>('0' + ((z % 10) + 10) % 10);
  lines.push_back(gutter("z") + digits);

  if (req.tally) {
    const auto& t = *req.tally;
    const Window tw = t.window();
    const int from = std::max(w.lo, tw.lo);
    const int to = std::min(w.hi, tw.hi);
    if (from <= to) {
      int hi = t.value(from);
      int lo = hi;
      for (int z = from; z <= to; ++z) {
        hi = std::max(hi, t.value(z));
        lo = std::min(lo, t.value(z));
      }
      for (int v = hi; v >= lo; --v) {
        std::string row(width, v == 0 ? '-' : ' ');
        for (int z = from; z <= to; ++z) {
          if (t.value(z) == v) row[col(z)] = 'o';
        }
        lines.push_back(gutter(std::to_string(v) + " |") + row);
      }
    }
  }

  std::string out;
  for (auto& l : lines) {
    rtrim(l);
    out += l;
    out += '\n';
  }
  return out;
}

std::string render_svg(const RenderRequest& req, Window w) {
  const int cols = w.width();
  const int cap_h = req.caps ? max_height(*req.caps) : 0;
  int t_hi = 0;
  int t_lo = 0;
  int from = w.lo;
  int to = w.lo - 1;
  if (req.tally) {
    from = std::max(w.lo, req.tally->window().lo);
    to = std::min(w.hi, req.tally->window().hi);
    for (int z = from; z <= to; ++z) {
      t_hi = std::max(t_hi, req.tally->value(z));
      t_lo = std::min(t_lo, req.tally->value(z));
    }
  }
  const int unit = kCell / 2;
  const int axis_y = kMargin + (cap_h + 1) * unit + t_hi * unit;
  const int width = 2 * kMargin + (cols - 1) * kCell;
  const int height = axis_y + kMargin + 2 * unit + (-t_lo) * unit;
  auto x_of = [&](int z) { return kMargin + (z - w.lo) * kCell; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  s << "  <line x1=\"" << x_of(w.lo) << "\" y1=\"" << axis_y << "\" x2=\"" << x_of(w.hi)
    << "\" y2=\"" << axis_y << "\" stroke=\"black\"/>\n";
  for (int z = w.lo; z <= w.hi; ++z) {
    const int x = x_of(z);
    if (req.weight.contains(z)) {
      s << "  <path d=\"M" << x - 4 << ' ' << axis_y - 4 << " L" << x + 4 << ' ' << axis_y + 4
        << " M" << x - 4 << ' ' << axis_y + 4 << " L" << x + 4 << ' ' << axis_y - 4
        << "\" stroke=\"black\"/>\n";
    } else {
      s << "  <circle cx=\"" << x << "\" cy=\"" << axis_y << "\" r=\"1.5\"/>\n";
    }
    s << "  <text x=\"" << x << "\" y=\"" << axis_y + 2 * unit
      << "\" font-size=\"8\" text-anchor=\"middle\">" << z << "</text>\n";
  }
  if (req.caps) {
    for (const auto& c : req.caps->caps()) {
      const int rx = (c.end - c.start) * kCell / 2;
      const int ry = req.caps->height(c) * unit;
      s << "  <path d=\"M" << x_of(c.start) << ' ' << axis_y << " A" << rx << ' ' << ry
        << " 0 0 1 " << x_of(c.end) << ' ' << axis_y << "\" fill=\"none\" stroke=\"blue\"/>\n";
    }
  }
  if (req.tally && from <= to) {
    s << "  <polyline fill=\"none\" stroke=\"red\" points=\"";
    for (int z = from; z <= to; ++z) {
      if (z != from) s << ' ';
      s << x_of(z) << ',' << axis_y - req.tally->value(z) * unit;
    }
    s << "\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace

Window default_render_window(const RenderRequest& req) {
  int lo = 0;
  int hi = 4;
  for (int x : req.weight.entries()) {
    lo = std::min(lo, x - 1);
    hi = std::max(hi, x);
  }
  if (req.caps) {
    for (const auto& c : req.caps->caps()) {
      lo = std::min(lo, c.start - 1);
      hi = std::max(hi, c.end);
    }
  }
  if (req.tally) {
    lo = std::min(lo, req.tally->window().lo);
    hi = std::max(hi, req.tally->window().hi);
  }
  return {lo, hi};
}

std::string render(const RenderRequest& req, RenderStyle style) {
  const Window w = req.window.value_or(default_render_window(req));
  if (w.width() <= 0) throw std::invalid_argument("render window is empty");
  check_inside(req, w);
  return style == RenderStyle::Ascii ? render_ascii(req, w) : render_svg(req, w);
}

}  // namespace capdiag
