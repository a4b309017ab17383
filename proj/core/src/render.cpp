#include "ilocal/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ilocal {

namespace {

constexpr std::size_t kMaxColumns = 120;
const std::string kTruncated = " ...";

struct Layout {
  std::vector<Grading> rows;  // descending
};

Grading lowest(const Tower& t) { return t.is_free() ? t.top : t.bottom(); }

// Rows are every grading in [min, max] congruent mod 2 to some occupied
// grading, so a single parity class steps by two.
Layout layout(const FUModule& m) {
  Layout out;
  if (m.empty()) {
    out.rows.push_back(Grading(0));
    return out;
  }
  Grading hi = m.towers().front().top;
  Grading lo = lowest(m.towers().front());
  std::set<Grading> classes;
  for (const auto& t : m.towers()) {
    hi = std::max(hi, t.top);
    lo = std::min(lo, lowest(t));
    classes.insert(t.top.mod(2));
  }
  std::set<Grading, std::greater<>> rows;
  for (const Grading& c : classes) {
    Grading g = hi - (hi - c).mod(2);
    for (; g >= lo; g -= 2) rows.insert(g);
  }
  out.rows.assign(rows.begin(), rows.end());
  return out;
}

bool occupies(const Tower& t, const Grading& g, const Grading& floor) {
  if (g > t.top) return false;
  if (!(t.top - g).is_even_integer()) return false;
  return t.is_free() ? g >= floor : g >= t.bottom();
}

bool spans(const Tower& t, const Grading& g, const Grading& floor) {
  return g <= t.top && g >= (t.is_free() ? floor : t.bottom());
}

char glyph(const Tower& t, const Grading& g, const Grading& floor) {
  if (occupies(t, g, floor)) {
    if (!t.is_free() && t.orientation != Orientation::Unoriented && g == t.tail())
      return t.orientation == Orientation::Down ? 'v' : '^';
    return 'o';
  }
  return spans(t, g, floor) ? '|' : ' ';
}

void rstrip(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

}  // namespace

std::string render_ascii(const FUModule& m) {
  const Layout l = layout(m);
  std::size_t label_width = 0;
  for (const auto& g : l.rows) label_width = std::max(label_width, g.to_string().size());
  const Grading floor = l.rows.back();

  const std::size_t prefix = label_width + 2;
  std::size_t shown = m.size();
  const bool truncated = prefix + 3 * shown > kMaxColumns;
  if (truncated) shown = (kMaxColumns - prefix - kTruncated.size()) / 3;

  std::string out;
  for (const auto& g : l.rows) {
    std::string label = g.to_string();
    std::string line(label_width - label.size(), ' ');
    line += label + " |";
    for (std::size_t k = 0; k < shown; ++k) {
      line += "  ";
      line += glyph(m.towers()[k], g, floor);
    }
    if (truncated) line += kTruncated;
    else rstrip(line);
    out += line + "\n";
  }
  return out;
}

std::string render_svg(const FUModule& m) {
  const Layout l = layout(m);
  const Grading floor = l.rows.back();
  constexpr int kLeft = 60, kTop = 20, kCol = 40, kRow = 24, kRadius = 5;
  const int width = kLeft + kCol * static_cast<int>(std::max<std::size_t>(m.size(), 1)) + kCol / 2;
  const int height = kTop * 2 + kRow * static_cast<int>(l.rows.size() - 1);

  auto row_y = [&](const Grading& g) {
    const auto it = std::find(l.rows.begin(), l.rows.end(), g);
    return kTop + kRow * static_cast<int>(it - l.rows.begin());
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"4\" refY=\"4\" orient=\"auto\">"
     << "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n"
     << "<g font-family=\"monospace\" font-size=\"12\">\n";
  for (const auto& g : l.rows) {
    const int y = row_y(g);
    os << "<line x1=\"" << kLeft - 10 << "\" y1=\"" << y << "\" x2=\"" << width << "\" y2=\"" << y
       << "\" stroke=\"#cccccc\" stroke-dasharray=\"2,3\"/>\n";
    os << "<text x=\"" << kLeft - 14 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">" << g.to_string() << "</text>\n";
  }
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Tower& t = m.towers()[k];
    const int x = kLeft + kCol / 2 + kCol * static_cast<int>(k);
    std::vector<int> ys;
    for (const auto& g : l.rows)
      if (occupies(t, g, floor)) ys.push_back(row_y(g));
    if (ys.size() > 1) {
      // Drawn from head to tail so the arrow marks the tail.
      const bool up = t.orientation == Orientation::Up;
      os << "<line x1=\"" << x << "\" y1=\"" << (up ? ys.back() : ys.front()) << "\" x2=\"" << x << "\" y2=\""
         << (up ? ys.front() : ys.back()) << "\" stroke=\"black\"";
      if (t.orientation != Orientation::Unoriented) os << " marker-end=\"url(#arrow)\"";
      if (t.is_free()) os << " stroke-dasharray=\"4,2\"";
      os << "/>\n";
    }
    for (int y : ys) os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << kRadius << "\" fill=\"black\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render(const FUModule& m, RenderFormat format) {
  return format == RenderFormat::Svg ? render_svg(m) : render_ascii(m);
}

}  // namespace ilocal
