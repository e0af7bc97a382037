#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "teich/errors.hpp"
#include "teich/isometry.hpp"
#include "teich/word.hpp"

namespace teich {

struct SurfaceType {
  int genus = 0;
  int punctures = 0;
  int boundary = 0;

  int euler() const { return 2 - 2 * genus - punctures - boundary; }
  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

// Accepts iff the Euler characteristic is negative.
void validate(const SurfaceType& st);

// A hole of a pants in a decomposition.
struct Slot {
  int pants = 0;
  int hole = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Gluing {
  Slot a, b;
};

enum class HoleKind { curve, boundary, puncture };

struct HoleRef {
  HoleKind kind = HoleKind::curve;
  int index = 0;  // gluing / boundary / puncture index
};

struct PantsDecomposition {
  SurfaceType type;
  int num_pants = 0;
  std::vector<Gluing> gluings;        // interior curves, by index
  std::vector<Slot> boundary_slots;   // by boundary index
  std::vector<Slot> puncture_slots;   // by puncture index

  HoleRef hole_ref(int pants, int hole) const;
  void check() const;  // structural invariants
};

// Deterministic decomposition per (g, p, b) family; layout documented in the
// implementation.
PantsDecomposition default_pants_decomposition(const SurfaceType& st);

// How the fundamental group generators arose; needed by the mirror map of
// doubled surfaces and by holonomy assembly.
struct GenOrigin {
  enum Kind { fresh_slot, stable_letter } kind = fresh_slot;
  int pants = 0, hole = 0;  // fresh_slot
  int gluing = -1;          // stable_letter
};

// Visit plan for assembling the decomposition: a spanning tree of the pants
// graph together with a deterministic visiting order.
struct AssemblyPlan {
  std::vector<int> order;          // pants visit order; order[0] is the root
  std::vector<int> parent_gluing;  // per pants: tree gluing index, -1 at root
};

// Word scheme of the fundamental group over the decomposition.  For b+p >= 1
// the group is free on the generators; closed surfaces carry the leftover
// pants relations in `relators` (they hold for any holonomy built from the
// same gluing data).
struct Presentation {
  int num_generators = 0;
  std::vector<std::array<Word, 3>> slot_words;  // per pants: words of x_{P,h}
  std::vector<int> stable_gen;                  // per gluing: generator id or 0
  std::vector<Word> boundary_words;             // per boundary index
  std::vector<Word> puncture_words;             // per puncture index
  std::vector<Word> curve_words;                // per gluing: word of slot a
  std::vector<Word> relators;
  std::vector<GenOrigin> gen_origin;            // per generator (1-based: [id-1])
  AssemblyPlan plan;

  const Word& slot_word(const Slot& s) const {
    return slot_words[static_cast<size_t>(s.pants)][static_cast<size_t>(s.hole)];
  }
};

Presentation presentation_of(const PantsDecomposition& pd);
// Extension used for doubles: slots of pants < seed_pants and stable letters
// of gluings < seed_gluings are taken from `seed`, and the given plan is
// followed verbatim.
Presentation presentation_of(const PantsDecomposition& pd, const AssemblyPlan& plan,
                             const Presentation* seed, int seed_pants,
                             int seed_gluings);

// Free-homotopy class of an essential closed curve, stored canonically.
struct CurveClass {
  Word word;                   // canonical cyclic form
  int boundary_parallel = -1;  // boundary index or -1
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// Throws on classes that are trivial, proper powers, or puncture-peripheral.
CurveClass make_curve_class(const PantsDecomposition& pd, const Presentation& pres,
                            const Word& w);

// Boundary-relative class of an arc between boundary components start and
// end, as the double coset <gamma_start> connector <gamma_end>.
struct ArcClass {
  int start_boundary = 0;
  int end_boundary = 0;
  Word connector;
  friend bool operator==(const ArcClass&, const ArcClass&) = default;
};

ArcClass make_arc_class(const PantsDecomposition& pd, const Presentation& pres,
                        int start, int end, const Word& connector);

// Canonical minimal representative of <Dl> w <Dr> (shortlex least among the
// minimum-length coset representatives).
Word reduce_double_coset(const Word& w, const Word& Dl, const Word& Dr);

// Evaluation oracle handed to the geometric simplicity test; geometry
// provides implementations backed by a holonomy.
struct HolonomyOracle {
  std::function<Isometry(const Word&)> eval;
};

enum class Simplicity { simple, non_simple, unknown };

struct SimplicityResult {
  Simplicity value = Simplicity::unknown;
  int bound = 0;  // conjugator bound examined when inconclusive
};

// Certified combinatorial criteria on the pants and the one-holed torus;
// geometric axis-crossing search elsewhere (a found crossing certifies
// non_simple, otherwise unknown at the examined bound).
SimplicityResult is_simple(const PantsDecomposition& pd, const Presentation& pres,
                           const Word& w, const HolonomyOracle* oracle,
                           int conj_bound);

// Deterministic, duplicate-free lists.  The oracle is required for the
// four-holed sphere and two-holed torus families (geometric filter).
std::vector<CurveClass> enumerate_curves(const PantsDecomposition& pd,
                                         const Presentation& pres, int bound,
                                         const HolonomyOracle* oracle = nullptr);
std::vector<ArcClass> enumerate_arcs(const PantsDecomposition& pd,
                                     const Presentation& pres, int bound);

// Topological double S^d: mirror copy glued along every boundary component.
struct DoubledSurface {
  SurfaceType base;
  SurfaceType double_type;
  PantsDecomposition pants_double;
  Presentation pres;               // extends the base presentation verbatim
  int base_pants = 0;
  int base_gluing_count = 0;       // gluings 0..m-1 are the base ones
  int base_generators = 0;
  std::vector<Word> mirror_gen;    // per double generator id: mu(gen)
  std::vector<Word> boundary_stable;  // per base boundary: crossing word t_i

  int mirror_pants(int p) const {
    return p < base_pants ? p + base_pants : p - base_pants;
  }
  Slot mirror_slot(const Slot& s) const { return {mirror_pants(s.pants), s.hole}; }
  Word mirror(const Word& w) const;  // the involution on words
};

DoubledSurface make_double(const SurfaceType& st, const PantsDecomposition& pd,
                           const Presentation& pres);

// The symmetric closed class alpha union bar(alpha) on the double.
CurveClass double_arc(const DoubledSurface& dc, const ArcClass& a);

// Helpers shared with the metric layer.
bool is_pants_family(const SurfaceType& st);
bool is_one_holed_torus(const SurfaceType& st);
std::vector<std::pair<long, long>> torus_slopes(int bound);  // |p|+|q| <= bound
Word torus_slope_word(long p, long q);                       // over gens a=1, b=2

}  // namespace teich
