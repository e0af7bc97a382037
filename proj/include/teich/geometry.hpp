#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "teich/hyptrig.hpp"
#include "teich/isometry.hpp"
#include "teich/surface.hpp"

namespace teich {

// Fenchel-Nielsen coordinates over a pants decomposition: lengths and twists
// per interior curve, lengths per boundary component.  Twists are measured
// in length units (one full twist equals the curve length).
struct HypStructure {
  PantsDecomposition decomposition;
  std::vector<double> curve_lengths;
  std::vector<double> twists;
  std::vector<double> boundary_lengths;

  void check() const;
};

// A discrete faithful representation of the fundamental group realizing the
// structure; generator images follow the word scheme of `pres`.
struct Holonomy {
  PantsDecomposition pd;
  Presentation pres;
  std::vector<Isometry> gen;  // image of generator id g at gen[g-1]
  // Basepoint convention: pants are assembled from right-angled hexagons,
  // the root pants anchored with its first positive hole on the imaginary
  // axis; gluings align seam feet at twist zero.
  std::string convention = "hexagon-walk/seam-aligned";

  Isometry eval(const Word& w) const;
  Isometry slot_image(const Slot& s) const { return eval(pres.slot_word(s)); }
};

Holonomy build_holonomy(const HypStructure& X);
Holonomy build_holonomy(const HypStructure& X, const Presentation& pres);

// Translation length of the class's holonomy; NotHyperbolicClass when the
// image is not hyperbolic (peripheral or trivial word).
double curve_length(const Holonomy& hol, const CurveClass& c);
double curve_length(const Holonomy& hol, const Word& w);

// Orthogeodesic length of the arc class, as the distance between the
// boundary axis lifts axis(D_start) and rho(connector) axis(D_end).
double arc_length(const Holonomy& hol, const ArcClass& a);

// FN coordinates of the doubled structure on the doubled decomposition:
// mirrored interior data, former boundary curves become interior curves of
// the same length with twist zero.
HypStructure double_structure(const HypStructure& X, const DoubledSurface& dc);

struct ThickPartSpec {
  double epsilon = 0.0;
  double epsilon0 = 0.0;
};

enum class ThickStatus { yes, no, unknown };

struct ThickResult {
  ThickStatus status = ThickStatus::unknown;
  int bound = 0;
  std::optional<CurveClass> witness;   // short or long offending class
  std::string reason;
};

// Membership in the epsilon0-relative epsilon-thick part.  `yes` is only
// reported when a collar-based systole certificate applies to the family;
// `no` always carries a witness.
ThickResult in_thick_part(const HypStructure& X, const ThickPartSpec& spec,
                          int bound);

// Word evaluation oracle for the geometric simplicity test.
HolonomyOracle oracle_of(const Holonomy& hol);

// Fixed generic structure on the decomposition, used as the topological
// oracle behind enumerate_curves on families without a combinatorial
// certificate.
HypStructure reference_structure(const PantsDecomposition& pd);

}  // namespace teich
