#pragma once

// Apartment figures for rank <= 2: walls of Phi_af, Phi_{chi,af} and
// Phi^diamond_{chi,af}, with A_0, A_{chi,0} and A^diamond_{chi,0} outlined.
// Geometry is exact (rational clipping); doubles appear only in the emitted SVG.

#include "tamehecke/chi_geometry.hpp"

#include <string>

namespace tamehecke {

struct ApartmentBounds {
  /// Coordinate window [lo, hi]^rank in the Y basis.
  Int lo = -2;
  Int hi = 2;
  int pixels = 640;
};

struct ApartmentStats {
  int affine_walls = 0;
  int chi_walls = 0;
  int diamond_walls = 0;
  /// Walls of Delta_chi / Delta^diamond carrying an edge of the clipped alcove.
  int chi_boundary = 0;
  int diamond_boundary = 0;
};

struct ApartmentFigure {
  std::string svg;
  ApartmentStats stats;
};

/// Throws std::invalid_argument for rank > 2 or an empty window.
ApartmentFigure apartment_svg(const ChiGeometry& g, const ApartmentBounds& bounds = {});

}  // namespace tamehecke
