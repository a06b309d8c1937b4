#include "tiled/apartment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tiled/errors.hpp"

namespace tiled {

namespace {

constexpr double kEdgePx = 40.0;       // pixels per lattice edge
constexpr double kRoot3Half = 0.86602540378443865;
constexpr double kPadPx = 34.0;

// Default palette: blue, green, yellow, purple at half strength.
const char* kPalette[] = {"#8080ff", "#80ff80", "#ffff80", "#df80bf"};

struct Vec2 {
  double x, y;
};

// Basis vectors at 120 degrees: increasing b moves one edge to the right,
// increasing a one edge up-left.  SVG y grows downward.
Vec2 embed(double a, double b) {
  return {(b - 0.5 * a) * kEdgePx, -(a * kRoot3Half) * kEdgePx};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0); // normalize -0
  return buf;
}

// Monotone chain; keeps collinear points off the hull.  Degenerate inputs
// (one or two distinct points) pass through unchanged.
std::vector<HullVertex> convex_hull(std::vector<HullVertex> pts) {
  std::sort(pts.begin(), pts.end(), [](const HullVertex& p, const HullVertex& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto cross = [](const HullVertex& o, const HullVertex& p, const HullVertex& q) {
    return (p.a - o.a) * (q.b - o.b) - (p.b - o.b) * (q.a - o.a);
  };
  std::vector<HullVertex> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1); // collinear input collapses to its two endpoints
  return hull;
}

} // namespace

std::vector<HullVertex> hull_vertices(const ExponentMatrix& e) {
  if (e.size() != 3)
    throw error(errc::unsupported_dimension,
                "apartment rendering supports n = 3 only", {e.size()}, 1);
  std::vector<HullVertex> out;
  for (int j = 0; j < 3; ++j) {
    HullVertex v{e.mu(1, j) - e.mu(0, j), e.mu(2, j) - e.mu(0, j)};
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

ApartmentScene ApartmentScene::fit(std::vector<ScenePolytope> polytopes,
                                   std::int64_t margin) {
  ApartmentScene scene;
  scene.a_min = scene.b_min = -2;
  scene.a_max = scene.b_max = 2;
  bool first = true;
  for (const auto& p : polytopes)
    for (const auto& v : hull_vertices(p.order)) {
      if (first) {
        scene.a_min = scene.a_max = v.a;
        scene.b_min = scene.b_max = v.b;
        first = false;
      }
      scene.a_min = std::min(scene.a_min, v.a);
      scene.a_max = std::max(scene.a_max, v.a);
      scene.b_min = std::min(scene.b_min, v.b);
      scene.b_max = std::max(scene.b_max, v.b);
    }
  if (!first) {
    scene.a_min -= margin;
    scene.a_max += margin;
    scene.b_min -= margin;
    scene.b_max += margin;
  }
  scene.polytopes = std::move(polytopes);
  return scene;
}

std::string render_svg(const ApartmentScene& scene) {
  std::vector<std::vector<HullVertex>> hulls;
  for (const auto& p : scene.polytopes) {
    auto verts = hull_vertices(p.order);
    for (const auto& v : verts)
      if (v.a < scene.a_min || v.a > scene.a_max || v.b < scene.b_min ||
          v.b > scene.b_max)
        throw error(errc::window_violation,
                    "distinguished vertex [0," + std::to_string(v.a) + "," +
                        std::to_string(v.b) + "] lies outside the window");
    hulls.push_back(convex_hull(std::move(verts)));
  }

  // Pixel bounds from the four window corners.
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (std::int64_t a : {scene.a_min, scene.a_max})
    for (std::int64_t b : {scene.b_min, scene.b_max}) {
      Vec2 v = embed(double(a), double(b));
      if (first) {
        min_x = max_x = v.x;
        min_y = max_y = v.y;
        first = false;
      }
      min_x = std::min(min_x, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
  const double width = max_x - min_x + 2 * kPadPx;
  const double height = max_y - min_y + 2 * kPadPx;
  auto at = [&](double a, double b) {
    Vec2 v = embed(a, b);
    return Vec2{v.x - min_x + kPadPx, v.y - min_y + kPadPx};
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(width) + "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " +
         fmt(width) + " " + fmt(height) + "\">\n";

  // Filled polytopes first so the lattice overlays them, as in hand drawings.
  for (size_t i = 0; i < hulls.size(); ++i) {
    const std::string color = scene.polytopes[i].color.empty()
                                  ? kPalette[i % 4]
                                  : scene.polytopes[i].color;
    const auto& hull = hulls[i];
    if (hull.size() == 1) {
      Vec2 c = at(double(hull[0].a), double(hull[0].b));
      svg += "  <circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
             "\" r=\"5.00\" fill=\"" + color + "\" stroke=\"#333333\"/>\n";
    } else if (hull.size() == 2) {
      Vec2 p = at(double(hull[0].a), double(hull[0].b));
      Vec2 q = at(double(hull[1].a), double(hull[1].b));
      svg += "  <line x1=\"" + fmt(p.x) + "\" y1=\"" + fmt(p.y) + "\" x2=\"" +
             fmt(q.x) + "\" y2=\"" + fmt(q.y) + "\" stroke=\"" + color +
             "\" stroke-width=\"4.00\"/>\n";
    } else {
      svg += "  <polygon points=\"";
      for (size_t j = 0; j < hull.size(); ++j) {
        if (j) svg += " ";
        Vec2 p = at(double(hull[j].a), double(hull[j].b));
        svg += fmt(p.x) + "," + fmt(p.y);
      }
      svg += "\" fill=\"" + color + "\" stroke=\"#333333\"/>\n";
    }
  }

  auto line = [&](double a1, double b1, double a2, double b2) {
    Vec2 p = at(a1, b1), q = at(a2, b2);
    svg += "  <line x1=\"" + fmt(p.x) + "\" y1=\"" + fmt(p.y) + "\" x2=\"" +
           fmt(q.x) + "\" y2=\"" + fmt(q.y) +
           "\" stroke=\"#555555\" stroke-width=\"1.00\"/>\n";
  };
  // x1 - x2 = const: lines of constant a.
  for (std::int64_t a = scene.a_min; a <= scene.a_max; ++a)
    line(double(a), double(scene.b_min), double(a), double(scene.b_max));
  // x1 - x3 = const: lines of constant b.
  for (std::int64_t b = scene.b_min; b <= scene.b_max; ++b)
    line(double(scene.a_min), double(b), double(scene.a_max), double(b));
  // x2 - x3 = const: lines of constant a - b, clipped to the window.
  for (std::int64_t c = scene.a_min - scene.b_max; c <= scene.a_max - scene.b_min;
       ++c) {
    const std::int64_t lo = std::max(scene.b_min, scene.a_min - c);
    const std::int64_t hi = std::min(scene.b_max, scene.a_max - c);
    if (lo > hi) continue;
    line(double(lo + c), double(lo), double(hi + c), double(hi));
  }

  if (scene.labels) {
    for (std::int64_t a = scene.a_max; a >= scene.a_min; --a)
      for (std::int64_t b = scene.b_min; b <= scene.b_max; ++b) {
        Vec2 p = at(double(a), double(b));
        svg += "  <text x=\"" + fmt(p.x + 3.0) + "\" y=\"" + fmt(p.y - 3.0) +
               "\" font-family=\"monospace\" font-size=\"9\">[0," +
               std::to_string(a) + "," + std::to_string(b) + "]</text>\n";
      }
  }

  svg += "</svg>\n";
  return svg;
}

} // namespace tiled
