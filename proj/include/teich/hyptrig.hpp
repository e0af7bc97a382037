#pragma once

#include <array>
#include <utility>

#include "teich/errors.hpp"

namespace teich {

// Right-angled hexagon relation: given alternating sides b, c and the side
// a' opposite a, returns a with
//   cosh a = -cosh b cosh c + sinh b sinh c cosh a'.
// Throws NoSuchHexagon when the right-hand side is <= 1.
double hexagon_side(double b, double c, double a_prime);

// Right-angled pentagon relation: cosh a = sinh b sinh c for the side a not
// adjacent to b or c.  Throws NoSuchPentagon when sinh b sinh c < 1; the
// degenerate value a = 0 at equality is allowed.
double pentagon_side(double b, double c);

// Quadrilateral with three right angles and one zero angle (vertex at a
// cusp): sinh a sinh b = 1.  Returns b for a given a > 0.
double cusp_square(double a);

// A hyperbolic pair of pants described by its three boundary lengths;
// length 0 encodes a cusp.
struct PantsGeometry {
  std::array<double, 3> boundary_lengths{};

  double length(int i) const { return boundary_lengths[static_cast<size_t>(i)]; }
  bool is_cusp(int i) const { return length(i) == 0.0; }
};

// Length of the simple orthogeodesic arc between distinct boundaries i and j
// (both of positive length; the third hole may be a cusp).  In half-lengths
// a = l_i/2, a' = l_j/2, a'' = l_k/2:
//   cosh b = (cosh a'' + cosh a cosh a') / (sinh a sinh a').
double pants_seam(const PantsGeometry& p, int i, int j);

// Full length of the simple orthogeodesic arc with both endpoints on
// boundary i.  The arc is unique; `encircled` selects which complementary
// hole the computation routes through (the two routes agree).  Cusp holes
// degenerate to the quadrilateral relation sinh(l_i/4) sinh(l/2) = 1 when
// both complementary holes are cusps.
double pants_self_arc(const PantsGeometry& p, int i, int encircled);

// All arc lengths of the pants as (i, j, length) with i == j for self arcs.
// Seams appear for pairs of genuine boundaries; one self arc per genuine
// boundary.
struct PantsArc {
  int start = 0;
  int end = 0;
  double length = 0.0;
};
std::array<PantsArc, 6> pants_arcs(const PantsGeometry& p, int* count);

// Exact length-spectrum metrics on a pants: d_L over the boundary classes,
// delta_L over boundary classes plus the finite arc family, both as logs of
// the larger directional supremum.  Throws CuspMismatch when the cusp
// patterns differ.
std::pair<double, double> pants_delta_exact(const PantsGeometry& p1,
                                            const PantsGeometry& p2);

}  // namespace teich
