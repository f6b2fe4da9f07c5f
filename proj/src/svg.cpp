#include "signrank/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

#include "signrank/counterexample.hpp"
#include "signrank/errors.hpp"

namespace signrank {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 40.0;
constexpr double kExtend = 0.10;

struct Pt {
  double x;
  double y;
};

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const IncidenceStructure& s, const Realization& r) {
  if (!validate_realization(s, r)) throw InvalidStructure("realization does not match the structure");
  const bool affine = std::all_of(r.points.begin(), r.points.end(), [](const auto& kv) { return !kv.second[2].is_zero(); });
  const Realization chart = affine ? r : normalize_affine(r);

  std::vector<Pt> pts;
  for (const auto& label : s.points()) {
    const Triple& p = chart.points.at(label);
    const Scalar inv = p[2].inverse();
    pts.push_back({(p[0] * inv).to_double(), (p[1] * inv).to_double()});
  }

  std::vector<std::pair<Pt, Pt>> segments;
  for (std::size_t l = 0; l < s.line_count(); ++l) {
    const auto members = s.line_members(l);
    std::pair<std::size_t, std::size_t> ends{members[0], members[1]};
    double best = -1;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const double dx = pts[members[a]].x - pts[members[b]].x;
        const double dy = pts[members[a]].y - pts[members[b]].y;
        if (dx * dx + dy * dy > best) {
          best = dx * dx + dy * dy;
          ends = {members[a], members[b]};
        }
      }
    const Pt p = pts[ends.first];
    const Pt q = pts[ends.second];
    const double dx = (q.x - p.x) * kExtend;
    const double dy = (q.y - p.y) * kExtend;
    segments.push_back({{p.x - dx, p.y - dy}, {q.x + dx, q.y + dy}});
  }

  double minx = pts.empty() ? 0 : pts[0].x, maxx = minx;
  double miny = pts.empty() ? 0 : pts[0].y, maxy = miny;
  auto grow = [&](const Pt& p) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  };
  for (const auto& p : pts) grow(p);
  for (const auto& [a, b] : segments) {
    grow(a);
    grow(b);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = (kCanvas - 2 * kMargin) / span;
  auto map = [&](const Pt& p) {
    return Pt{kMargin + (p.x - minx) * scale, kCanvas - kMargin - (p.y - miny) * scale};
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kCanvas) << "\" height=\"" << num(kCanvas)
      << "\" viewBox=\"0 0 " << num(kCanvas) << ' ' << num(kCanvas) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (std::size_t l = 0; l < segments.size(); ++l) {
    const Pt a = map(segments[l].first);
    const Pt b = map(segments[l].second);
    out << "    <line data-line=\"" << escape(line_name(s, l)) << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y)
        << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
  }
  out << "  </g>\n";
  out << "  <g font-family=\"sans-serif\" font-size=\"16\">\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Pt p = map(pts[i]);
    out << "    <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"4\" fill=\"crimson\"/>\n";
    out << "    <text x=\"" << num(p.x + 7) << "\" y=\"" << num(p.y - 7) << "\">" << escape(s.points()[i])
        << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace signrank
