#include "teich/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace teich {

Isometry Isometry::axis_translation(double s) {
  const double e = std::exp(s / 2.0);
  return Isometry{e, 0.0, 0.0, 1.0 / e};
}

Isometry Isometry::normalized() const {
  const double dt = det();
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw MalformedIsometry("isometry determinant is not positive");
  }
  const double s = 1.0 / std::sqrt(dt);
  return Isometry{a * s, b * s, c * s, d * s};
}

std::complex<double> Isometry::apply(std::complex<double> z) const {
  return (a * z + b) / (c * z + d);
}

IdealPoint Isometry::apply(const IdealPoint& p) const {
  const double nx = a * p.x + b * p.w;
  const double nw = c * p.x + d * p.w;
  if (nw == 0.0) return IdealPoint::infinity();
  return IdealPoint::finite(nx / nw);
}

std::ostream& operator<<(std::ostream& os, const Isometry& m) {
  return os << "[" << m.a << ", " << m.b << "; " << m.c << ", " << m.d << "]";
}

bool approx_equal(const Isometry& m, const Isometry& n, double tol) {
  const Isometry mm = m.normalized();
  const Isometry nn = n.normalized();
  auto close = [tol](const Isometry& u, const Isometry& v) {
    return std::abs(u.a - v.a) <= tol && std::abs(u.b - v.b) <= tol &&
           std::abs(u.c - v.c) <= tol && std::abs(u.d - v.d) <= tol;
  };
  const Isometry neg{-nn.a, -nn.b, -nn.c, -nn.d};
  return close(mm, nn) || close(mm, neg);
}

Geodesic::Geodesic(IdealPoint p_, IdealPoint q_) : p(p_), q(q_) {
  if (ideal_diff(p, q) == 0.0) {
    throw CrossingGeodesics("geodesic endpoints coincide");
  }
}

Geodesic apply(const Isometry& m, const Geodesic& g) {
  return Geodesic(m.apply(g.p), m.apply(g.q));
}

TraceClass classify(const Isometry& m) {
  if (std::abs(m.det() - 1.0) > 1e-9) {
    throw MalformedIsometry("determinant differs from 1 beyond tolerance");
  }
  const double t = std::abs(m.trace());
  const double offdiag = std::abs(m.b) + std::abs(m.c);
  if (offdiag <= kIsoTol && std::abs(m.a - m.d) <= kIsoTol) {
    return TraceClass{IsoKind::identity, 0.0};
  }
  if (t > 2.0 + kIsoTol) {
    return TraceClass{IsoKind::hyperbolic, 2.0 * std::acosh(t / 2.0)};
  }
  if (t >= 2.0 - kIsoTol) {
    return TraceClass{IsoKind::parabolic, 0.0};
  }
  return TraceClass{IsoKind::elliptic, 0.0};
}

Geodesic axis(const Isometry& m0) {
  const Isometry m = m0.normalized();
  const TraceClass tc = classify(m);
  if (tc.kind != IsoKind::hyperbolic) {
    throw NotHyperbolic("axis requested for a non-hyperbolic isometry");
  }
  // Fixed points solve c x^2 + (d - a) x - b = 0; the discriminant equals
  // trace^2 - 4 > 0.  Stable quadratic: avoid cancellation in the +/- root.
  const double tr = m.trace();
  const double disc = tr * tr - 4.0;
  const double sq = std::sqrt(disc);
  IdealPoint r1, r2;
  const double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  if (std::abs(m.c) <= 1e-14 * scale) {
    r1 = IdealPoint::infinity();
    r2 = IdealPoint::finite(m.b / (m.d - m.a));
  } else {
    const double da = m.d - m.a;
    const double qq = -0.5 * (da + (da >= 0 ? sq : -sq));
    r1 = IdealPoint::finite(qq / m.c);
    r2 = IdealPoint::finite(-m.b / qq);
  }
  // Attracting fixed point x: |c x + d| < 1 (Moebius derivative test).
  auto deriv_mag = [&m](const IdealPoint& p) {
    if (p.is_infinity()) {
      // In the chart w = 1/z the derivative magnitude at infinity is |d/a|
      // after normalization; infinity attracts iff |a| > |d|.
      return std::abs(m.d / m.a);
    }
    const double t = m.c * p.value() + m.d;
    return t * t;
  };
  const bool r1_attracts = deriv_mag(r1) < 1.0;
  const IdealPoint att = r1_attracts ? r1 : r2;
  const IdealPoint rep = r1_attracts ? r2 : r1;
  return Geodesic(rep, att);
}

namespace {

bool shares_endpoint(const Geodesic& g1, const Geodesic& g2) {
  // Canonical forms make exact comparison meaningful; keep a tiny relative
  // tolerance for endpoints produced by independent computations.
  auto same = [](const IdealPoint& a, const IdealPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
    const double s = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
    return std::abs(a.value() - b.value()) <= 1e-12 * s;
  };
  return same(g1.p, g2.p) || same(g1.p, g2.q) || same(g1.q, g2.p) ||
         same(g1.q, g2.q);
}

// Cross-ratio [p1,q1;p2,q2] = (D(p1,p2) D(q1,q2)) / (D(p1,q2) D(q1,p2)).
// Negative iff the endpoint pairs interleave on the boundary circle.
double endpoint_cross_ratio(const Geodesic& g1, const Geodesic& g2) {
  const double n = ideal_diff(g1.p, g2.p) * ideal_diff(g1.q, g2.q);
  const double d = ideal_diff(g1.p, g2.q) * ideal_diff(g1.q, g2.p);
  return n / d;
}

}  // namespace

CrossKind geodesics_cross(const Geodesic& g1, const Geodesic& g2) {
  if (shares_endpoint(g1, g2)) return CrossKind::shared_endpoint;
  return endpoint_cross_ratio(g1, g2) < 0.0 ? CrossKind::cross
                                            : CrossKind::disjoint;
}

double ortho_distance(const Geodesic& g1, const Geodesic& g2) {
  const CrossKind ck = geodesics_cross(g1, g2);
  if (ck != CrossKind::disjoint) {
    throw CrossingGeodesics("ortho_distance requires disjoint geodesics");
  }
  double u = endpoint_cross_ratio(g1, g2);
  if (u > 1.0) u = 1.0 / u;
  if (!(u > 0.0) || u >= 1.0) {
    throw CrossingGeodesics("degenerate endpoint configuration");
  }
  // With disjoint geodesics the cross-ratio equals tanh^2(dist / 2).
  return 2.0 * std::atanh(std::sqrt(u));
}

double point_distance(std::complex<double> z1, std::complex<double> z2) {
  const double dx = z1.real() - z2.real();
  const double dy = z1.imag() - z2.imag();
  const double q = (dx * dx + dy * dy) / (2.0 * z1.imag() * z2.imag());
  return std::acosh(1.0 + q);
}

}  // namespace teich
