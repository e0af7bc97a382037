#include "teich/hyptrig.hpp"

#include <algorithm>
#include <cmath>

namespace teich {

double hexagon_side(double b, double c, double a_prime) {
  if (!(b > 0.0) || !(c > 0.0) || !(a_prime > 0.0)) {
    throw NoSuchHexagon("hexagon sides must be positive");
  }
  const double rhs =
      -std::cosh(b) * std::cosh(c) + std::sinh(b) * std::sinh(c) * std::cosh(a_prime);
  if (rhs <= 1.0) {
    throw NoSuchHexagon("no right-angled hexagon with these alternating sides");
  }
  return std::acosh(rhs);
}

double pentagon_side(double b, double c) {
  if (!(b > 0.0) || !(c > 0.0)) {
    throw NoSuchPentagon("pentagon sides must be positive");
  }
  const double rhs = std::sinh(b) * std::sinh(c);
  if (rhs < 1.0) {
    throw NoSuchPentagon("no right-angled pentagon with these sides");
  }
  return std::acosh(rhs);
}

double cusp_square(double a) {
  if (!(a > 0.0)) {
    throw CuspEndpoint("cusp quadrilateral needs a positive side");
  }
  return std::asinh(1.0 / std::sinh(a));
}

namespace {

int third_hole(int i, int j) { return 3 - i - j; }

void check_hole(int i) {
  if (i < 0 || i > 2) throw Error("pants hole index out of range");
}

}  // namespace

double pants_seam(const PantsGeometry& p, int i, int j) {
  check_hole(i);
  check_hole(j);
  if (i == j) throw Error("pants_seam needs two distinct holes");
  if (p.is_cusp(i) || p.is_cusp(j)) {
    throw CuspEndpoint("seam endpoints must be genuine boundaries");
  }
  const int k = third_hole(i, j);
  const double a = p.length(i) / 2.0;
  const double ap = p.length(j) / 2.0;
  const double app = p.length(k) / 2.0;
  const double rhs =
      (std::cosh(app) + std::cosh(a) * std::cosh(ap)) / (std::sinh(a) * std::sinh(ap));
  return std::acosh(rhs);
}

double pants_self_arc(const PantsGeometry& p, int i, int encircled) {
  check_hole(i);
  check_hole(encircled);
  if (encircled == i) throw Error("self arc cannot encircle its own boundary");
  if (p.is_cusp(i)) {
    throw CuspEndpoint("self arc endpoints must be on a genuine boundary");
  }
  const int j = encircled;
  const int k = third_hole(i, j);
  if (p.is_cusp(j) && p.is_cusp(k)) {
    // Two cusps: quadrilateral relation with a = l_i/4, b = l/2.
    return 2.0 * std::asinh(1.0 / std::sinh(p.length(i) / 4.0));
  }
  // Route through a genuine complementary hole; both routes give the same
  // arc (the orthogeodesic with both feet on boundary i is unique).
  const int via = p.is_cusp(j) ? k : j;
  const double d = pants_seam(p, i, via);
  return 2.0 * std::acosh(std::sinh(p.length(via) / 2.0) * std::sinh(d));
}

std::array<PantsArc, 6> pants_arcs(const PantsGeometry& p, int* count) {
  std::array<PantsArc, 6> out{};
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!p.is_cusp(i) && !p.is_cusp(j)) {
        out[n++] = PantsArc{i, j, pants_seam(p, i, j)};
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (p.is_cusp(i)) continue;
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const int via = p.is_cusp(j) ? k : j;
    out[n++] = PantsArc{i, i, pants_self_arc(p, i, via)};
  }
  if (count) *count = n;
  return out;
}

std::pair<double, double> pants_delta_exact(const PantsGeometry& p1,
                                            const PantsGeometry& p2) {
  for (int i = 0; i < 3; ++i) {
    if (p1.is_cusp(i) != p2.is_cusp(i)) {
      throw CuspMismatch("pants have different cusp patterns");
    }
    if ((!p1.is_cusp(i) && !(p1.length(i) > 0.0)) ||
        (!p2.is_cusp(i) && !(p2.length(i) > 0.0))) {
      throw Error("boundary lengths must be positive");
    }
  }
  double sup_curves = 0.0;  // max over boundary classes, both directions
  bool has_boundary = false;
  for (int i = 0; i < 3; ++i) {
    if (p1.is_cusp(i)) continue;
    has_boundary = true;
    const double r = p1.length(i) / p2.length(i);
    sup_curves = std::max({sup_curves, r, 1.0 / r});
  }
  if (!has_boundary) throw Error("pants without boundary have no classes");
  double sup_all = sup_curves;
  int n1 = 0, n2 = 0;
  const auto arcs1 = pants_arcs(p1, &n1);
  const auto arcs2 = pants_arcs(p2, &n2);
  for (int k = 0; k < n1; ++k) {
    const double r = arcs1[k].length / arcs2[k].length;
    sup_all = std::max({sup_all, r, 1.0 / r});
  }
  (void)n2;
  return {std::log(sup_all), std::log(sup_curves)};
}

}  // namespace teich
