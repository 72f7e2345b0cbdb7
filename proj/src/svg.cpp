#include "tamehecke/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tamehecke {

namespace {

using Point = std::array<Rational, 2>;
using Polygon = std::vector<Point>;

// a x + b y + c
struct Form {
  Rational a, b, c;
  Rational at(const Point& p) const { return a * p[0] + b * p[1] + c; }
};

Form form_of(const RootDatum& d, const AffineRoot& r) {
  const IntVec& f = d.root_functional(r.root);
  return {Rational(f[0]), Rational(d.rank() == 2 ? f[1] : 0), Rational(r.offset)};
}

// Keeps the part of a convex polygon where the form is >= 0.
Polygon clip(const Polygon& poly, const Form& h) {
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    Rational vp = h.at(p), vq = h.at(q);
    if (vp >= 0 && (out.empty() || out.back() != p)) out.push_back(p);
    if ((vp > 0 && vq < 0) || (vp < 0 && vq > 0)) {
      Rational t = vp / (vp - vq);
      Point x{p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t};
      if (out.empty() || out.back() != x) out.push_back(x);
    }
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

// Distinct vertices of the polygon on the zero set of h.
std::vector<Point> on_line(const Polygon& poly, const Form& h) {
  std::vector<Point> pts;
  for (const auto& p : poly)
    if (h.at(p) == 0 && std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  return pts;
}

struct Screen {
  double r00 = 1, r01 = 0, r11 = 1;
  double minx = 0, maxy = 0, scale = 1, margin = 16;
  std::array<double, 2> map(const Point& p) const {
    double x = boost::rational_cast<double>(p[0]), y = boost::rational_cast<double>(p[1]);
    double u = r00 * x + r01 * y, v = r11 * y;
    return {margin + (u - minx) * scale, margin + (maxy - v) * scale};
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string points_attr(const Screen& s, const Polygon& poly) {
  std::string out;
  for (const auto& p : poly) {
    auto q = s.map(p);
    if (!out.empty()) out += ' ';
    out += fmt(q[0]) + "," + fmt(q[1]);
  }
  return out;
}

}  // namespace

ApartmentFigure apartment_svg(const ChiGeometry& g, const ApartmentBounds& bounds) {
  const RootDatum& d = g.datum();
  const int r = d.rank();
  if (r > 2) throw std::invalid_argument("apartment figures need rank <= 2, got rank " + std::to_string(r));
  if (r < 1 || bounds.lo >= bounds.hi) throw std::invalid_argument("apartment window is empty");

  const Rational lo(bounds.lo), hi(bounds.hi);
  // Rank one is drawn as a strip.
  const Rational ylo = r == 2 ? lo : Rational(0);
  const Rational yhi = r == 2 ? hi : (hi - lo) / 4;
  const Polygon box{{lo, ylo}, {hi, ylo}, {hi, yhi}, {lo, yhi}};

  // W-invariant metric for the picture.
  double G[2][2] = {{0, 0}, {0, 0}};
  if (r == 2) {
    for (const auto& w : g.weyl())
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) G[i][j] += static_cast<double>(w.at(k, i) * w.at(k, j));
  } else {
    G[0][0] = G[1][1] = 1;
  }
  Screen s;
  s.r00 = std::sqrt(G[0][0]);
  s.r01 = G[0][1] / s.r00;
  s.r11 = std::sqrt(G[1][1] - s.r01 * s.r01);
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const auto& p : box) {
    double x = boost::rational_cast<double>(p[0]), y = boost::rational_cast<double>(p[1]);
    double u = s.r00 * x + s.r01 * y, v = s.r11 * y;
    minx = std::min(minx, u), maxx = std::max(maxx, u);
    miny = std::min(miny, v), maxy = std::max(maxy, v);
  }
  s.minx = minx;
  s.maxy = maxy;
  s.scale = (bounds.pixels - 2 * s.margin) / std::max(maxx - minx, maxy - miny);
  const double width = 2 * s.margin + (maxx - minx) * s.scale;
  const double height = 2 * s.margin + (maxy - miny) * s.scale;

  ApartmentFigure fig;
  std::ostringstream walls;
  for (int a : d.positive_roots()) {
    Form f = form_of(d, {a, 0});
    Rational fmin = 0, fmax = 0;
    bool first = true;
    for (const auto& p : box) {
      Rational v = f.a * p[0] + f.b * p[1];
      if (first || v < fmin) fmin = v;
      if (first || v > fmax) fmax = v;
      first = false;
    }
    // f(x) + k = 0 meets the window for -fmax <= k <= -fmin.
    Int kmin = -floor_div(fmax.numerator(), fmax.denominator());
    Int kmax = floor_div(-fmin.numerator(), fmin.denominator());
    for (Int k = kmin; k <= kmax; ++k) {
      AffineRoot root{a, k};
      auto pts = on_line(clip(box, form_of(d, root)), form_of(d, root));
      if (pts.size() < 2) continue;
      auto p = s.map(pts[0]), q = s.map(pts[1]);
      std::string xy = "x1=\"" + fmt(p[0]) + "\" y1=\"" + fmt(p[1]) + "\" x2=\"" + fmt(q[0]) + "\" y2=\"" +
                       fmt(q[1]) + "\"";
      std::string label = to_string(d, root);
      ++fig.stats.affine_walls;
      walls << "  <line class=\"wall\" data-root=\"" << label << "\" " << xy
            << " stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
      if (g.system().affine.contains(root)) {
        ++fig.stats.chi_walls;
        walls << "  <line class=\"wall chi\" data-root=\"" << label << "\" " << xy
              << " stroke=\"#e6b800\" stroke-width=\"3\"/>\n";
      }
      if (g.system().diamond_affine.contains(root)) {
        ++fig.stats.diamond_walls;
        walls << "  <line class=\"wall diamond\" data-root=\"" << label << "\" " << xy
              << " stroke=\"#2e8b57\" stroke-width=\"1.5\"/>\n";
      }
    }
  }

  auto alcove = [&](const std::vector<AffineRoot>& delta, int* boundary) {
    Polygon poly = box;
    for (const auto& a : delta) poly = clip(poly, form_of(d, a));
    if (boundary)
      for (const auto& a : delta)
        if (on_line(poly, form_of(d, a)).size() >= 2) ++*boundary;
    return poly;
  };
  Polygon base = alcove(simple_affine_roots(d), nullptr);
  Polygon chi = alcove(g.delta_chi(), &fig.stats.chi_boundary);
  Polygon diamond = alcove(g.delta_diamond(), &fig.stats.diamond_boundary);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" fill=\"white\"/>\n";
  if (base.size() >= 3)
    os << "  <polygon class=\"alcove base\" points=\"" << points_attr(s, base)
       << "\" fill=\"#d62728\" fill-opacity=\"0.55\" stroke=\"none\"/>\n";
  os << walls.str();
  if (diamond.size() >= 3)
    os << "  <polygon class=\"alcove diamond\" points=\"" << points_attr(s, diamond)
       << "\" fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"5\"/>\n";
  if (chi.size() >= 3)
    os << "  <polygon class=\"alcove chi\" points=\"" << points_attr(s, chi)
       << "\" fill=\"none\" stroke=\"#e6b800\" stroke-width=\"5\" stroke-dasharray=\"12 6\"/>\n";
  os << "</svg>\n";
  fig.svg = os.str();
  return fig;
}

}  // namespace tamehecke
