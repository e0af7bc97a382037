#pragma once

#include <array>
#include <complex>
#include <iosfwd>

#include "teich/errors.hpp"

namespace teich {

// Module-wide tolerance for classification boundaries and invariant checks.
inline constexpr double kIsoTol = 1e-9;

// A point of the ideal boundary of the upper half-plane, stored as a
// homogeneous pair (x : w) so that infinity (1 : 0) is first-class.
// Canonical form: (v, 1) for a finite point v, (1, 0) for infinity.
struct IdealPoint {
  double x = 0.0;
  double w = 1.0;

  static IdealPoint finite(double v) { return IdealPoint{v, 1.0}; }
  static IdealPoint infinity() { return IdealPoint{1.0, 0.0}; }

  bool is_infinity() const { return w == 0.0; }
  double value() const { return x / w; }  // finite points only

  friend bool operator==(const IdealPoint& a, const IdealPoint& b) {
    return a.x == b.x && a.w == b.w;
  }
};

// Homogeneous difference; zero iff the two ideal points coincide.
inline double ideal_diff(const IdealPoint& a, const IdealPoint& b) {
  return a.x * b.w - b.x * a.w;
}

// An orientation-preserving isometry of the hyperbolic plane in the 2x2
// real model, identified with its negation.  Unit determinant up to kIsoTol.
struct Isometry {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static Isometry identity() { return {}; }

  // Translation along (0, infinity) by signed distance s (towards infinity
  // when s > 0).
  static Isometry axis_translation(double s);

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }

  Isometry inverse() const { return Isometry{d, -b, -c, a}; }

  // Rescale so det == 1 exactly (up to roundoff).  Requires det > 0.
  Isometry normalized() const;

  // Moebius action on a point of the (closure of the) upper half-plane.
  std::complex<double> apply(std::complex<double> z) const;
  IdealPoint apply(const IdealPoint& p) const;

  friend Isometry operator*(const Isometry& m, const Isometry& n) {
    return Isometry{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                    m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
};

std::ostream& operator<<(std::ostream&, const Isometry&);

// True if m equals +/-n entrywise within tol after normalization.
bool approx_equal(const Isometry& m, const Isometry& n, double tol = kIsoTol);

// An unoriented complete geodesic carried as an ordered pair of distinct
// ideal endpoints.  Equality is decidable on the canonical endpoint forms.
struct Geodesic {
  IdealPoint p, q;

  Geodesic(IdealPoint p_, IdealPoint q_);

  friend bool operator==(const Geodesic& g, const Geodesic& h) {
    return g.p == h.p && g.q == h.q;
  }
};

Geodesic apply(const Isometry& m, const Geodesic& g);

enum class IsoKind { identity, elliptic, parabolic, hyperbolic };

struct TraceClass {
  IsoKind kind = IsoKind::identity;
  double translation_length = 0.0;
};

// Trace classification.  |trace| within kIsoTol of 2 counts as parabolic
// (identity when the matrix itself is +/-I); throws MalformedIsometry when
// |det - 1| > 1e-9.
TraceClass classify(const Isometry& m);

// The axis of a hyperbolic isometry, ordered (repelling, attracting).
// Throws NotHyperbolic otherwise.
Geodesic axis(const Isometry& m);

enum class CrossKind { disjoint, cross, shared_endpoint };

// Endpoint interleaving on the ideal boundary circle.
CrossKind geodesics_cross(const Geodesic& g1, const Geodesic& g2);

// Length of the common perpendicular between two disjoint geodesics,
// computed in closed form from the cross-ratio of the four ideal endpoints.
// Throws CrossingGeodesics when the geodesics meet or share an endpoint.
double ortho_distance(const Geodesic& g1, const Geodesic& g2);

// Hyperbolic distance between interior points of the upper half-plane.
double point_distance(std::complex<double> z1, std::complex<double> z2);

}  // namespace teich
