#ifndef TILED_APARTMENT_HPP
#define TILED_APARTMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tiled/exponent_matrix.hpp"

namespace tiled {

// Homothety class [0, a, b] of a vertex in the n = 3 apartment.
struct HullVertex {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const HullVertex&, const HullVertex&) = default;
};

// Normalized distinguished vertices [0, mu_2j - mu_1j, mu_3j - mu_1j] of the
// columns, deduplicated in column order.  Only n = 3 is supported.
std::vector<HullVertex> hull_vertices(const ExponentMatrix& e);

struct ScenePolytope {
  ExponentMatrix order;
  std::string color; // empty: take next color from the default palette
};

// Window in (a, b) = (m2 - m1, m3 - m1) coordinates plus the polytopes to
// fill.  Every distinguished vertex must lie inside the window.
struct ApartmentScene {
  std::int64_t a_min = 0, a_max = 0;
  std::int64_t b_min = 0, b_max = 0;
  std::vector<ScenePolytope> polytopes;
  bool labels = true;

  // Window spanning all distinguished vertices with the given margin.
  static ApartmentScene fit(std::vector<ScenePolytope> polytopes,
                            std::int64_t margin = 1);
};

// Deterministic SVG 1.1 document: the triangular lattice of hyperplanes
// x_i - x_j = c, vertex labels, and one filled hull per polytope.
// Byte-identical output for identical input.
std::string render_svg(const ApartmentScene& scene);

} // namespace tiled

#endif
