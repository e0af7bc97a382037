#include "teich/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace teich {

void HypStructure::check() const {
  decomposition.check();
  if (curve_lengths.size() != decomposition.gluings.size() ||
      twists.size() != decomposition.gluings.size() ||
      boundary_lengths.size() != decomposition.boundary_slots.size()) {
    throw Error("FN coordinate sizes do not match the decomposition");
  }
  for (double l : curve_lengths) {
    if (!(l > 0.0) || !std::isfinite(l)) throw Error("curve lengths must be positive");
  }
  for (double l : boundary_lengths) {
    if (!(l > 0.0) || !std::isfinite(l)) throw Error("boundary lengths must be positive");
  }
  for (double t : twists) {
    if (!std::isfinite(t)) throw Error("twists must be finite");
  }
}

Isometry Holonomy::eval(const Word& w) const {
  Isometry m = Isometry::identity();
  int k = 0;
  for (Letter l : w.letters()) {
    const Isometry& g = gen[static_cast<std::size_t>(std::abs(l) - 1)];
    m = m * (l > 0 ? g : g.inverse());
    if (++k % 32 == 0) m = m.normalized();  // word enumeration multiplies long chains
  }
  return m.normalized();
}

namespace {

// det -1 matrices represent orientation-reversing maps z -> (a zbar + b) /
// (c zbar + d); the product of two of them is the SL2 matrix of the
// orientation-preserving composition.
struct RawMat {
  double a, b, c, d;
};

RawMat mul(const RawMat& m, const RawMat& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}

RawMat raw(const Isometry& m) { return {m.a, m.b, m.c, m.d}; }

Isometry to_iso(const RawMat& m) { return Isometry{m.a, m.b, m.c, m.d}.normalized(); }

RawMat raw_inverse(const RawMat& m) {
  const double dt = m.a * m.d - m.b * m.c;
  return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

// Reflection in the geodesic F((0, infinity)).
RawMat reflection_of_frame(const Isometry& F) {
  static const RawMat mirror{-1.0, 0.0, 0.0, 1.0};
  return mul(mul(raw(F), mirror), raw_inverse(raw(F)));
}

// Reflection in the semicircle with ideal endpoints u, v (finite).
RawMat reflection_of_circle(double u, double v) {
  const double c = 0.5 * (u + v);
  const double r = 0.5 * std::abs(v - u);
  return {c / r, (r * r - c * c) / r, 1.0 / r, -c / r};
}

Isometry rotation(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return Isometry{c, s, -s, c};
}

const Isometry kFlip{0.0, -1.0, 1.0, 0.0};  // z -> -1/z

// One pair of pants in local coordinates.  Holes are indexed 0,1,2 with
// half-lengths a[i] (0 = cusp); hole 0 must be genuine.  The three hole
// translations satisfy X0 X1 X2 = 1 exactly; marked[i] is the foot of the
// seam from hole i to hole i+1 on the axis of X[i].
struct LocalPants {
  Isometry X[3];
  std::complex<double> marked[3];
  bool has_marked[3] = {false, false, false};
};

double seam_from_halves(double ai, double aj, double ak) {
  return std::acosh((std::cosh(ak) + std::cosh(ai) * std::cosh(aj)) /
                    (std::sinh(ai) * std::sinh(aj)));
}

LocalPants build_local_pants(double a0, double a1, double a2) {
  if (!(a0 > 0.0)) throw NumericalDegeneracy("anchor hole must be genuine");
  LocalPants lp;
  const std::complex<double> base(0.0, 1.0);
  const Isometry turn_right = rotation(-M_PI / 2.0);
  const Isometry turn_left = rotation(M_PI / 2.0);

  // Seam lines sigma01 and sigma20 are perpendicular to the hole-0 axis
  // (the imaginary axis) at heights 1 and e^{-a0}.
  const RawMat M01{0.0, 1.0, 1.0, 0.0};
  const RawMat M20{0.0, std::exp(-a0), std::exp(a0), 0.0};
  lp.marked[0] = base;
  lp.has_marked[0] = true;

  RawMat M12{};
  if (a1 > 0.0) {
    // Forward hexagon walk: along sigma01 to the hole-1 axis, then along it
    // to the sigma12 corner.  Interior sits on the right of the walk.
    const double d01 = seam_from_halves(a0, a1, a2);
    Isometry F = turn_right;  // at i, turned onto sigma01
    F = F * Isometry::axis_translation(d01) * turn_right;
    F = F * Isometry::axis_translation(a1);
    lp.marked[1] = F.apply(base);
    lp.has_marked[1] = true;
    F = F * turn_right;
    M12 = reflection_of_frame(F);
    if (a2 > 0.0) {
      const double d12 = seam_from_halves(a1, a2, a0);
      F = F * Isometry::axis_translation(d12) * turn_right;
      F = F * Isometry::axis_translation(a2);
      lp.marked[2] = F.apply(base);
      lp.has_marked[2] = true;
    }
  } else if (a2 > 0.0) {
    // Hole 1 is a cusp: reach sigma12 through the hole-2 axis instead,
    // walking the hexagon boundary backwards (interior on the left).
    const double d20 = seam_from_halves(a2, a0, a1);
    Isometry F = Isometry::axis_translation(-a0) * rotation(M_PI) * turn_left;
    F = F * Isometry::axis_translation(d20);
    lp.marked[2] = F.apply(base);
    lp.has_marked[2] = true;
    F = F * turn_left * Isometry::axis_translation(a2) * turn_left;
    M12 = reflection_of_frame(F);
  } else {
    // Two cusps at the ideal endpoints of sigma01 and sigma20.
    M12 = reflection_of_circle(std::exp(-a0), 1.0);
  }

  lp.X[0] = to_iso(mul(M20, M01));
  lp.X[1] = to_iso(mul(M01, M12));
  lp.X[2] = to_iso(mul(M12, M20));
  return lp;
}

// The unique isometry mapping (0, infinity, i) to (attracting endpoint,
// repelling endpoint, marked point) for the given hyperbolic isometry.
Isometry hole_frame(const Isometry& Xh, std::complex<double> marked) {
  const Geodesic ax = axis(Xh);  // (repelling, attracting)
  const IdealPoint rep = ax.p, att = ax.q;
  Isometry M{rep.x, att.x, rep.w, att.w};
  if (M.det() < 0.0) {
    M.b = -M.b;
    M.d = -M.d;
  }
  M = M.normalized();
  const std::complex<double> u = M.inverse().apply(marked);
  if (!(u.imag() > 0.0) || std::abs(u.real()) > 1e-7 * u.imag()) {
    throw NumericalDegeneracy("marked point does not sit on the axis");
  }
  return M * Isometry::axis_translation(std::log(u.imag()));
}

struct PantsData {
  LocalPants local;
  Isometry frame[3];        // hole frames, for holes with marked points
  bool has_frame[3] = {false, false, false};
};

}  // namespace

Holonomy build_holonomy(const HypStructure& X) {
  return build_holonomy(X, presentation_of(X.decomposition));
}

Holonomy build_holonomy(const HypStructure& X, const Presentation& pres) {
  X.check();
  const PantsDecomposition& pd = X.decomposition;
  const std::size_t np = static_cast<std::size_t>(pd.num_pants);

  // Half-length of each hole.
  auto half_length = [&](int pants, int hole) {
    const HoleRef hr = pd.hole_ref(pants, hole);
    switch (hr.kind) {
      case HoleKind::curve:
        return X.curve_lengths[static_cast<std::size_t>(hr.index)] / 2.0;
      case HoleKind::boundary:
        return X.boundary_lengths[static_cast<std::size_t>(hr.index)] / 2.0;
      default:
        return 0.0;
    }
  };

  std::vector<PantsData> data(np);
  for (int p = 0; p < pd.num_pants; ++p) {
    double a[3] = {half_length(p, 0), half_length(p, 1), half_length(p, 2)};
    int rot = 0;
    while (!(a[rot] > 0.0)) {
      if (++rot == 3) throw NumericalDegeneracy("pants with three cusps");
    }
    const LocalPants built =
        build_local_pants(a[rot], a[(rot + 1) % 3], a[(rot + 2) % 3]);
    PantsData& pdta = data[static_cast<std::size_t>(p)];
    for (int k = 0; k < 3; ++k) {
      const int h = (rot + k) % 3;
      pdta.local.X[h] = built.X[k];
      pdta.local.marked[h] = built.marked[k];
      pdta.local.has_marked[h] = built.has_marked[k];
    }
    for (int h = 0; h < 3; ++h) {
      if (pdta.local.has_marked[h]) {
        pdta.frame[h] = hole_frame(pdta.local.X[h], pdta.local.marked[h]);
        pdta.has_frame[h] = true;
      }
    }
  }

  // Place pants along the spanning tree: seam feet aligned at twist zero,
  // the glued copy flipped to the far side of the shared axis.
  std::vector<Isometry> V(np);
  for (std::size_t idx = 1; idx < pres.plan.order.size(); ++idx) {
    const int child = pres.plan.order[idx];
    const int e = pres.plan.parent_gluing[static_cast<std::size_t>(child)];
    if (e < 0) throw Error("non-root pants without a parent edge");
    const Gluing& gl = pd.gluings[static_cast<std::size_t>(e)];
    const Slot mine = gl.a.pants == child ? gl.a : gl.b;
    const Slot theirs = gl.a.pants == child ? gl.b : gl.a;
    const PantsData& dm = data[static_cast<std::size_t>(mine.pants)];
    const PantsData& dt = data[static_cast<std::size_t>(theirs.pants)];
    if (!dm.has_frame[mine.hole] || !dt.has_frame[theirs.hole]) {
      throw NumericalDegeneracy("glued hole lacks a frame");
    }
    const double tw = X.twists[static_cast<std::size_t>(e)];
    V[static_cast<std::size_t>(child)] =
        V[static_cast<std::size_t>(theirs.pants)] * dt.frame[theirs.hole] *
        Isometry::axis_translation(tw) * kFlip *
        dm.frame[mine.hole].inverse();
  }

  Holonomy hol;
  hol.pd = pd;
  hol.pres = pres;
  hol.gen.resize(static_cast<std::size_t>(pres.num_generators));
  for (int gid = 1; gid <= pres.num_generators; ++gid) {
    const GenOrigin& org = pres.gen_origin[static_cast<std::size_t>(gid - 1)];
    Isometry img;
    if (org.kind == GenOrigin::fresh_slot) {
      const std::size_t P = static_cast<std::size_t>(org.pants);
      img = V[P] * data[P].local.X[org.hole] * V[P].inverse();
    } else {
      const Gluing& gl = pd.gluings[static_cast<std::size_t>(org.gluing)];
      const PantsData& da = data[static_cast<std::size_t>(gl.a.pants)];
      const PantsData& db = data[static_cast<std::size_t>(gl.b.pants)];
      const double tw = X.twists[static_cast<std::size_t>(org.gluing)];
      img = V[static_cast<std::size_t>(gl.a.pants)] * da.frame[gl.a.hole] *
            Isometry::axis_translation(tw) * kFlip *
            db.frame[gl.b.hole].inverse() *
            V[static_cast<std::size_t>(gl.b.pants)].inverse();
    }
    hol.gen[static_cast<std::size_t>(gid - 1)] = img.normalized();
  }
  return hol;
}

double curve_length(const Holonomy& hol, const Word& w) {
  const TraceClass tc = classify(hol.eval(w));
  if (tc.kind != IsoKind::hyperbolic) {
    throw NotHyperbolicClass("word does not represent a closed geodesic");
  }
  return tc.translation_length;
}

double curve_length(const Holonomy& hol, const CurveClass& c) {
  return curve_length(hol, c.word);
}

double arc_length(const Holonomy& hol, const ArcClass& a) {
  const Word& Di = hol.pres.boundary_words[static_cast<std::size_t>(a.start_boundary)];
  const Word& Dj = hol.pres.boundary_words[static_cast<std::size_t>(a.end_boundary)];
  const Geodesic axis_i = axis(hol.eval(Di));
  const Geodesic axis_j = axis(hol.eval(Dj));
  const Isometry W = hol.eval(a.connector);
  try {
    return ortho_distance(axis_i, apply(W, axis_j));
  } catch (const CrossingGeodesics&) {
    throw CrossingAxes("arc class is not realized by disjoint boundary lifts");
  }
}

HypStructure double_structure(const HypStructure& X, const DoubledSurface& dc) {
  X.check();
  HypStructure Y;
  Y.decomposition = dc.pants_double;
  Y.curve_lengths = X.curve_lengths;
  Y.twists = X.twists;
  for (double L : X.boundary_lengths) {
    Y.curve_lengths.push_back(L);
    Y.twists.push_back(0.0);  // forced by the isometric involution
  }
  for (std::size_t e = 0; e < X.curve_lengths.size(); ++e) {
    Y.curve_lengths.push_back(X.curve_lengths[e]);
    Y.twists.push_back(-X.twists[e]);  // mirror copy twists in reverse
  }
  return Y;
}

HolonomyOracle oracle_of(const Holonomy& hol) {
  return HolonomyOracle{[&hol](const Word& w) { return hol.eval(w); }};
}

HypStructure reference_structure(const PantsDecomposition& pd) {
  HypStructure X;
  X.decomposition = pd;
  X.curve_lengths.assign(pd.gluings.size(), 1.7);
  X.twists.assign(pd.gluings.size(), 0.41);
  X.boundary_lengths.assign(pd.boundary_slots.size(), 1.3);
  return X;
}

namespace {

double collar_half_width(double l) { return std::asinh(1.0 / std::sinh(l / 2.0)); }

}  // namespace

ThickResult in_thick_part(const HypStructure& X, const ThickPartSpec& spec,
                          int bound) {
  if (!(spec.epsilon > 0.0) || spec.epsilon0 < spec.epsilon) {
    throw Error("thick part needs 0 < epsilon <= epsilon0");
  }
  const PantsDecomposition& pd = X.decomposition;
  const Presentation pres = presentation_of(pd);

  ThickResult res;
  res.bound = bound;
  // Boundary classes belong to C(S): they face the epsilon lower bound and
  // are the only classes facing the epsilon0 upper bound.
  for (std::size_t i = 0; i < X.boundary_lengths.size(); ++i) {
    const double L = X.boundary_lengths[i];
    if (L > spec.epsilon0 || L < spec.epsilon) {
      res.status = ThickStatus::no;
      res.witness = make_curve_class(pd, pres, pres.boundary_words[i]);
      res.reason = L > spec.epsilon0 ? "boundary longer than epsilon0"
                                     : "boundary shorter than epsilon";
      return res;
    }
  }

  // Witness search among enumerated classes.
  Holonomy hol = build_holonomy(X, pres);
  const HolonomyOracle oracle = oracle_of(hol);
  const bool certified_family = is_pants_family(pd.type) || is_one_holed_torus(pd.type) ||
                                (pd.type.genus == 0 && pd.type.punctures + pd.type.boundary == 4) ||
                                (pd.type.genus == 1 && pd.type.punctures + pd.type.boundary == 2);
  for (const CurveClass& c : enumerate_curves(pd, pres, bound, &oracle)) {
    double len;
    try {
      len = curve_length(hol, c);
    } catch (const NotHyperbolicClass&) {
      continue;
    }
    if (len < spec.epsilon) {
      res.status = ThickStatus::no;
      res.witness = c;
      res.reason = "enumerated class shorter than epsilon";
      return res;
    }
  }

  // Collar certificates per family: any essential closed geodesic either is
  // a decomposition curve / boundary class or crosses decomposition curves,
  // and each crossing contributes a full collar passage.
  double certified_systole = std::numeric_limits<double>::infinity();
  bool have_certificate = false;
  if (is_pants_family(pd.type)) {
    have_certificate = true;
    for (double L : X.boundary_lengths) certified_systole = std::min(certified_systole, L);
  } else if (is_one_holed_torus(pd.type)) {
    have_certificate = true;
    const double l = X.curve_lengths[0];
    certified_systole = std::min({l, 2.0 * collar_half_width(l)});
    for (double L : X.boundary_lengths) certified_systole = std::min(certified_systole, L);
  } else if (pd.type.genus == 0 && pd.type.punctures + pd.type.boundary == 4) {
    have_certificate = true;
    const double l = X.curve_lengths[0];
    certified_systole = std::min({l, 4.0 * collar_half_width(l)});
    for (double L : X.boundary_lengths) certified_systole = std::min(certified_systole, L);
  } else if (pd.type.genus == 1 && pd.type.punctures + pd.type.boundary == 2) {
    have_certificate = true;
    const double l_handle = X.curve_lengths[0];
    const double l_sep = X.curve_lengths[1];
    certified_systole =
        std::min({l_handle, l_sep, 2.0 * collar_half_width(l_handle),
                  4.0 * collar_half_width(l_sep)});
    for (double L : X.boundary_lengths) certified_systole = std::min(certified_systole, L);
  }

  if (have_certificate && certified_family && certified_systole >= spec.epsilon) {
    res.status = ThickStatus::yes;
    return res;
  }
  res.status = ThickStatus::unknown;
  res.reason = "no systole certificate for this family at this bound";
  return res;
}

}  // namespace teich
