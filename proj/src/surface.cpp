#include "teich/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace teich {

void validate(const SurfaceType& st) {
  if (st.genus < 0 || st.punctures < 0 || st.boundary < 0) {
    throw NonHyperbolicType("negative surface datum");
  }
  if (st.euler() >= 0) {
    throw NonHyperbolicType("surface type is not hyperbolic (chi >= 0)");
  }
}

HoleRef PantsDecomposition::hole_ref(int pants, int hole) const {
  for (std::size_t e = 0; e < gluings.size(); ++e) {
    if ((gluings[e].a == Slot{pants, hole}) || (gluings[e].b == Slot{pants, hole})) {
      return {HoleKind::curve, static_cast<int>(e)};
    }
  }
  for (std::size_t i = 0; i < boundary_slots.size(); ++i) {
    if (boundary_slots[i] == Slot{pants, hole}) return {HoleKind::boundary, static_cast<int>(i)};
  }
  for (std::size_t i = 0; i < puncture_slots.size(); ++i) {
    if (puncture_slots[i] == Slot{pants, hole}) return {HoleKind::puncture, static_cast<int>(i)};
  }
  throw Error("slot not covered by the decomposition");
}

void PantsDecomposition::check() const {
  validate(type);
  if (num_pants != -type.euler()) {
    throw Error("pants count does not match the Euler characteristic");
  }
  const int expected_curves = 3 * type.genus - 3 + type.punctures + type.boundary;
  if (static_cast<int>(gluings.size()) != expected_curves) {
    throw Error("interior curve count does not match the surface type");
  }
  if (static_cast<int>(boundary_slots.size()) != type.boundary ||
      static_cast<int>(puncture_slots.size()) != type.punctures) {
    throw Error("boundary/puncture slot counts do not match the surface type");
  }
  // Every slot appears exactly once.
  std::set<std::pair<int, int>> seen;
  auto add = [&seen](const Slot& s) {
    if (!seen.insert({s.pants, s.hole}).second) throw Error("slot used twice");
  };
  for (const auto& g : gluings) {
    add(g.a);
    add(g.b);
  }
  for (const auto& s : boundary_slots) add(s);
  for (const auto& s : puncture_slots) add(s);
  if (static_cast<int>(seen.size()) != 3 * num_pants) {
    throw Error("decomposition does not cover all slots");
  }
  // Connectivity of the pants graph.
  std::vector<int> comp(static_cast<std::size_t>(num_pants), -1);
  std::deque<int> queue{0};
  comp[0] = 0;
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    for (const auto& g : gluings) {
      for (const auto& [from, to] :
           {std::pair{g.a, g.b}, std::pair{g.b, g.a}}) {
        if (from.pants == p && comp[static_cast<std::size_t>(to.pants)] < 0) {
          comp[static_cast<std::size_t>(to.pants)] = 0;
          queue.push_back(to.pants);
        }
      }
    }
  }
  if (num_pants > 0 && std::count(comp.begin(), comp.end(), 0) != num_pants) {
    throw Error("pants graph is not connected");
  }
}

PantsDecomposition default_pants_decomposition(const SurfaceType& st) {
  validate(st);
  PantsDecomposition pd;
  pd.type = st;
  pd.num_pants = -st.euler();
  const int g = st.genus, p = st.punctures, b = st.boundary;

  auto free_holes = [&pd](std::vector<Slot> holes, int nb, int np) {
    // First nb become boundaries, next np punctures.
    for (int i = 0; i < nb; ++i) pd.boundary_slots.push_back(holes[static_cast<std::size_t>(i)]);
    for (int i = 0; i < np; ++i) pd.puncture_slots.push_back(holes[static_cast<std::size_t>(nb + i)]);
  };

  if (g == 0 && p + b == 3) {
    // A single pants.
    free_holes({{0, 0}, {0, 1}, {0, 2}}, b, p);
  } else if (g == 1 && p + b == 1) {
    // One-holed torus: one pants with holes 0 and 1 self-glued.
    pd.gluings.push_back({{0, 0}, {0, 1}});
    free_holes({{0, 2}}, b, p);
  } else if (g == 2 && p + b == 0) {
    // Closed genus two (arises as a double): two handle pants glued along
    // all three holes pairwise... not a valid pants graph; instead: two
    // self-glued handle pants joined by their remaining holes.
    pd.gluings.push_back({{0, 0}, {0, 1}});
    pd.gluings.push_back({{1, 0}, {1, 1}});
    pd.gluings.push_back({{0, 2}, {1, 2}});
  } else {
    // General chain: a linear chain of m = g+p+b-2 pants whose free holes
    // are (in order) b boundaries, p punctures, g handle attachments; each
    // handle attachment is capped by a self-glued handle pants.
    const int m = g + p + b - 2;
    if (m <= 0) throw NonHyperbolicType("unsupported surface type layout");
    std::vector<Slot> holes;
    // Chain pants i and i+1 share a curve: (i,2) -- (i+1,0).
    for (int i = 0; i + 1 < m; ++i) pd.gluings.push_back({{i, 2}, {i + 1, 0}});
    holes.push_back({0, 0});
    holes.push_back({0, 1});
    for (int i = 1; i < m; ++i) holes.push_back({i, 1});
    holes.push_back({m - 1, 2});
    // holes.size() == m + 2 == g + p + b
    free_holes(holes, b, p);
    for (int h = 0; h < g; ++h) {
      const Slot attach = holes[static_cast<std::size_t>(b + p + h)];
      const int hp = m + h;  // handle pants index
      pd.gluings.push_back({{hp, 0}, {hp, 1}});
      pd.gluings.push_back({attach, {hp, 2}});
    }
  }
  pd.check();
  return pd;
}

namespace {

AssemblyPlan default_plan(const PantsDecomposition& pd) {
  AssemblyPlan plan;
  plan.parent_gluing.assign(static_cast<std::size_t>(pd.num_pants), -1);
  std::vector<bool> visited(static_cast<std::size_t>(pd.num_pants), false);
  std::deque<int> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    plan.order.push_back(p);
    for (std::size_t e = 0; e < pd.gluings.size(); ++e) {
      const auto& gl = pd.gluings[e];
      for (const auto& [from, to] : {std::pair{gl.a, gl.b}, std::pair{gl.b, gl.a}}) {
        if (from.pants == p && !visited[static_cast<std::size_t>(to.pants)]) {
          visited[static_cast<std::size_t>(to.pants)] = true;
          plan.parent_gluing[static_cast<std::size_t>(to.pants)] = static_cast<int>(e);
          queue.push_back(to.pants);
        }
      }
    }
  }
  return plan;
}

}  // namespace

Presentation presentation_of(const PantsDecomposition& pd) {
  return presentation_of(pd, default_plan(pd), nullptr, 0, 0);
}

Presentation presentation_of(const PantsDecomposition& pd, const AssemblyPlan& plan,
                             const Presentation* seed, int seed_pants,
                             int seed_gluings) {
  Presentation pres;
  pres.plan = plan;
  const std::size_t np = static_cast<std::size_t>(pd.num_pants);
  pres.slot_words.assign(np, {});
  pres.stable_gen.assign(pd.gluings.size(), 0);
  std::vector<std::array<bool, 3>> defined(np, {false, false, false});

  if (seed) {
    pres.num_generators = seed->num_generators;
    pres.gen_origin = seed->gen_origin;
    for (int p = 0; p < seed_pants; ++p) {
      pres.slot_words[static_cast<std::size_t>(p)] = seed->slot_words[static_cast<std::size_t>(p)];
      defined[static_cast<std::size_t>(p)] = {true, true, true};
    }
    for (int e = 0; e < seed_gluings; ++e) {
      pres.stable_gen[static_cast<std::size_t>(e)] = seed->stable_gen[static_cast<std::size_t>(e)];
    }
  }

  auto is_tree_edge = [&plan](int e) {
    return std::find(plan.parent_gluing.begin(), plan.parent_gluing.end(), e) !=
           plan.parent_gluing.end();
  };
  auto fresh_gen = [&pres](int pants, int hole) {
    pres.num_generators += 1;
    pres.gen_origin.push_back(GenOrigin{GenOrigin::fresh_slot, pants, hole, -1});
    return pres.num_generators;
  };
  auto stable_for = [&pres](int e, const PantsDecomposition&) {
    int& id = pres.stable_gen[static_cast<std::size_t>(e)];
    if (id == 0) {
      pres.num_generators += 1;
      pres.gen_origin.push_back(GenOrigin{GenOrigin::stable_letter, 0, 0, e});
      id = pres.num_generators;
    }
    return id;
  };
  auto get = [&pres](const Slot& s) -> Word& {
    return pres.slot_words[static_cast<std::size_t>(s.pants)][static_cast<std::size_t>(s.hole)];
  };
  auto is_def = [&defined](const Slot& s) {
    return defined[static_cast<std::size_t>(s.pants)][static_cast<std::size_t>(s.hole)];
  };
  auto set_def = [&defined, &get](const Slot& s, const Word& w) {
    get(s) = w;
    defined[static_cast<std::size_t>(s.pants)][static_cast<std::size_t>(s.hole)] = true;
  };

  for (int pidx : plan.order) {
    const std::size_t P = static_cast<std::size_t>(pidx);
    if (defined[P][0] && defined[P][1] && defined[P][2]) continue;  // seeded
    bool relation_used = false;
    // Parent tree edge: derive this pants' glued slot from the parent side.
    const int pe = plan.parent_gluing[P];
    if (pe >= 0) {
      const auto& gl = pd.gluings[static_cast<std::size_t>(pe)];
      const Slot mine = gl.a.pants == pidx ? gl.a : gl.b;
      const Slot theirs = gl.a.pants == pidx ? gl.b : gl.a;
      if (!is_def(theirs)) throw Error("assembly plan visits child before parent");
      set_def(mine, get(theirs).inverse());
    }
    int guard = 0;
    while (!(defined[P][0] && defined[P][1] && defined[P][2])) {
      if (++guard > 16) throw Error("presentation propagation stuck");
      bool progress = false;
      // Non-tree edges whose far side is known define this side via the
      // stable letter: x_near = t^-1 x_far^-1 t with the edge stored
      // (far, near), or the conjugate form when this side is stored first.
      for (int h = 0; h < 3; ++h) {
        if (defined[P][static_cast<std::size_t>(h)]) continue;
        const Slot s{pidx, h};
        for (std::size_t e = 0; e < pd.gluings.size(); ++e) {
          if (is_tree_edge(static_cast<int>(e))) continue;
          const auto& gl = pd.gluings[e];
          if (gl.a == s && is_def(gl.b)) {
            const int t = stable_for(static_cast<int>(e), pd);
            // relation: x_b = t^-1 x_a^-1 t  =>  x_a = t x_b^-1 t^-1
            set_def(s, Word::gen(t) * get(gl.b).inverse() * Word::gen(t).inverse());
            progress = true;
            break;
          }
          if (gl.b == s && is_def(gl.a)) {
            const int t = stable_for(static_cast<int>(e), pd);
            set_def(s, Word::gen(t).inverse() * get(gl.a).inverse() * Word::gen(t));
            progress = true;
            break;
          }
        }
      }
      if (progress) continue;
      const int undef = 3 - (defined[P][0] ? 1 : 0) - (defined[P][1] ? 1 : 0) -
                        (defined[P][2] ? 1 : 0);
      if (undef == 0) break;
      if (undef == 1 && !relation_used) {
        // Solve x0 x1 x2 = 1 for the remaining slot.
        const auto& w = pres.slot_words[P];
        if (!defined[P][0]) {
          set_def({pidx, 0}, (w[1] * w[2]).inverse());
        } else if (!defined[P][1]) {
          set_def({pidx, 1}, w[0].inverse() * w[2].inverse());
        } else {
          set_def({pidx, 2}, (w[0] * w[1]).inverse());
        }
        relation_used = true;
        continue;
      }
      // Stuck: introduce a fresh generator at the first undefined slot.
      for (int h = 0; h < 3; ++h) {
        if (!defined[P][static_cast<std::size_t>(h)]) {
          set_def({pidx, h}, Word::gen(fresh_gen(pidx, h)));
          break;
        }
      }
    }
    if (!relation_used) {
      const auto& w = pres.slot_words[P];
      const Word rel = w[0] * w[1] * w[2];
      if (!rel.empty()) pres.relators.push_back(rel);
    }
  }

  for (const auto& s : pd.boundary_slots) pres.boundary_words.push_back(pres.slot_word(s));
  for (const auto& s : pd.puncture_slots) pres.puncture_words.push_back(pres.slot_word(s));
  for (const auto& gl : pd.gluings) pres.curve_words.push_back(pres.slot_word(gl.a));
  return pres;
}

namespace {

bool conjugate_to_any(const Word& canon, const std::vector<Word>& words) {
  for (const Word& w : words) {
    if (canonical_cyclic(w) == canon) return true;
  }
  return false;
}

}  // namespace

CurveClass make_curve_class(const PantsDecomposition& pd, const Presentation& pres,
                            const Word& w) {
  const Word canon = canonical_cyclic(w);
  if (canon.empty()) throw Error("trivial word is not an essential curve");
  if (is_proper_power(canon)) throw Error("curve classes must be primitive");
  if (conjugate_to_any(canon, pres.puncture_words)) {
    throw Error("puncture-peripheral classes are not essential");
  }
  CurveClass c;
  c.word = canon;
  for (std::size_t i = 0; i < pres.boundary_words.size(); ++i) {
    if (canonical_cyclic(pres.boundary_words[i]) == canon) {
      c.boundary_parallel = static_cast<int>(i);
      break;
    }
  }
  (void)pd;
  return c;
}

Word reduce_double_coset(const Word& w0, const Word& Dl, const Word& Dr) {
  // Strict descent to a minimum-length representative, then a plateau sweep
  // for the shortlex-least one.
  Word w = w0;
  for (;;) {
    Word best = w;
    for (const Word& cand :
         {Dl * w, Dl.inverse() * w, w * Dr, w * Dr.inverse()}) {
      if (cand.size() < best.size()) best = cand;
    }
    if (best.size() == w.size()) break;
    w = best;
  }
  std::set<Word> layer{w};
  std::deque<Word> queue{w};
  Word best = w;
  int guard = 0;
  while (!queue.empty()) {
    if (++guard > 4096) break;  // plateau is tiny in practice
    const Word u = queue.front();
    queue.pop_front();
    if (u < best) best = u;
    for (const Word& cand :
         {Dl * u, Dl.inverse() * u, u * Dr, u * Dr.inverse()}) {
      if (cand.size() == w.size() && layer.insert(cand).second) {
        queue.push_back(cand);
      }
    }
  }
  return best;
}

ArcClass make_arc_class(const PantsDecomposition& pd, const Presentation& pres,
                        int start, int end, const Word& connector) {
  if (start < 0 || end < 0 || start >= static_cast<int>(pres.boundary_words.size()) ||
      end >= static_cast<int>(pres.boundary_words.size())) {
    throw CuspEndpoint("arc endpoints must be boundary components");
  }
  int i = start, j = end;
  Word w = connector;
  if (i > j) {
    std::swap(i, j);
    w = w.inverse();
  }
  const Word& Di = pres.boundary_words[static_cast<std::size_t>(i)];
  const Word& Dj = pres.boundary_words[static_cast<std::size_t>(j)];
  Word c = reduce_double_coset(w, Di, Dj);
  if (i == j) {
    const Word c2 = reduce_double_coset(w.inverse(), Di, Dj);
    if (c2 < c) c = c2;
  }
  // Essentiality: a same-boundary arc whose connector lies in <D_i> is
  // homotopic into the boundary.
  if (i == j && c.empty()) {
    throw Error("arc class is not essential");
  }
  (void)pd;
  return ArcClass{i, j, c};
}

bool is_pants_family(const SurfaceType& st) {
  return st.genus == 0 && st.punctures + st.boundary == 3;
}

bool is_one_holed_torus(const SurfaceType& st) {
  return st.genus == 1 && st.punctures + st.boundary == 1;
}

std::vector<std::pair<long, long>> torus_slopes(int bound) {
  std::vector<std::pair<long, long>> out;
  if (bound >= 1) out.push_back({1, 0});
  for (long q = 1; q <= bound; ++q) {
    for (long p = -(bound - q); p <= bound - q; ++p) {
      if (std::gcd(std::abs(p), q) != 1) continue;
      out.push_back({p, q});
    }
  }
  return out;
}

Word torus_slope_word(long p, long q) {
  if (p >= 0) return christoffel(p, q, 1, 2);
  // Negative slopes: the automorphism a -> a^-1 carries (|p|, q) to (p, q).
  const Word w = christoffel(-p, q, 1, 2);
  std::vector<Letter> ls;
  for (Letter l : w.letters()) {
    ls.push_back(std::abs(l) == 1 ? static_cast<Letter>(-l) : l);
  }
  return Word(std::move(ls));
}

namespace {

// All freely reduced words over the generators, lengths 1..bound.
void reduced_words(int num_gens, int bound, const std::function<void(const Word&)>& fn) {
  std::vector<Letter> stack;
  std::function<void()> rec = [&]() {
    if (!stack.empty()) fn(Word(stack));
    if (static_cast<int>(stack.size()) == bound) return;
    for (int g = 1; g <= num_gens; ++g) {
      for (Letter l : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
        if (!stack.empty() && stack.back() == -l) continue;
        stack.push_back(l);
        rec();
        stack.pop_back();
      }
    }
  };
  rec();
}

std::vector<Isometry> conjugator_images(const Presentation& pres,
                                        const HolonomyOracle& oracle, int cbound) {
  std::vector<Isometry> out;
  out.push_back(Isometry::identity());
  reduced_words(pres.num_generators, cbound,
                [&](const Word& w) { out.push_back(oracle.eval(w)); });
  return out;
}

bool crossing_found(const Geodesic& ax, const std::vector<Isometry>& conj) {
  for (const Isometry& u : conj) {
    Geodesic moved = apply(u, ax);
    if (geodesics_cross(ax, moved) == CrossKind::cross) return true;
  }
  return false;
}

}  // namespace

SimplicityResult is_simple(const PantsDecomposition& pd, const Presentation& pres,
                           const Word& w, const HolonomyOracle* oracle,
                           int conj_bound) {
  const Word canon = canonical_cyclic(w);
  if (is_pants_family(pd.type)) {
    // C(pants) is exactly the boundary classes.
    if (conjugate_to_any(canon, pres.boundary_words)) return {Simplicity::simple, 0};
    return {Simplicity::non_simple, 0};
  }
  if (is_one_holed_torus(pd.type)) {
    if (conjugate_to_any(canon, pres.boundary_words) ||
        conjugate_to_any(canon, pres.puncture_words)) {
      return {Simplicity::simple, 0};
    }
    // Interior simple classes are exactly the primitive (slope) classes.
    const auto ab = abelianization(canon, 2);
    if ((ab[0] != 0 || ab[1] != 0) && std::gcd(std::abs(ab[0]), std::abs(ab[1])) == 1) {
      if (canonical_cyclic(torus_slope_word(ab[0], ab[1])) == canon) {
        return {Simplicity::simple, 0};
      }
    }
    return {Simplicity::non_simple, 0};
  }
  if (!oracle) return {Simplicity::unknown, 0};
  const Isometry img = oracle->eval(canon);
  if (classify(img).kind != IsoKind::hyperbolic) return {Simplicity::unknown, 0};
  const Geodesic ax = axis(img);
  if (crossing_found(ax, conjugator_images(pres, *oracle, conj_bound))) {
    return {Simplicity::non_simple, conj_bound};
  }
  return {Simplicity::unknown, conj_bound};
}

std::vector<CurveClass> enumerate_curves(const PantsDecomposition& pd,
                                         const Presentation& pres, int bound,
                                         const HolonomyOracle* oracle) {
  std::vector<CurveClass> out;
  std::set<Word> seen;
  auto push = [&](const CurveClass& c) {
    if (seen.insert(c.word).second) out.push_back(c);
  };
  if (is_pants_family(pd.type)) {
    for (const Word& bw : pres.boundary_words) push(make_curve_class(pd, pres, bw));
  } else if (is_one_holed_torus(pd.type)) {
    for (const Word& bw : pres.boundary_words) push(make_curve_class(pd, pres, bw));
    for (auto [p, q] : torus_slopes(bound)) {
      push(make_curve_class(pd, pres, torus_slope_word(p, q)));
    }
  } else {
    if (!oracle) {
      throw UncertifiedFamily(
          "curve enumeration for this family needs a holonomy oracle");
    }
    const int cbound = std::min(bound, 4);
    const auto conj = conjugator_images(pres, *oracle, cbound);
    for (const Word& bw : pres.boundary_words) push(make_curve_class(pd, pres, bw));
    reduced_words(pres.num_generators, bound, [&](const Word& w) {
      const Word canon = canonical_cyclic(w);
      if (canon != w) return;  // one representative per class
      if (canon.empty() || is_proper_power(canon)) return;
      if (conjugate_to_any(canon, pres.puncture_words)) return;
      if (seen.count(canon)) return;
      const Isometry img = oracle->eval(canon);
      if (classify(img).kind != IsoKind::hyperbolic) return;
      if (crossing_found(axis(img), conj)) return;
      push(make_curve_class(pd, pres, canon));
    });
  }
  std::sort(out.begin(), out.end(),
            [](const CurveClass& a, const CurveClass& b) { return a.word < b.word; });
  return out;
}

std::vector<ArcClass> enumerate_arcs(const PantsDecomposition& pd,
                                     const Presentation& pres, int bound) {
  if (pd.type.boundary < 1) throw NoBoundary("surface has no boundary arcs");
  std::vector<ArcClass> out;
  std::set<std::tuple<int, int, Word>> seen;
  auto push = [&](const ArcClass& a) {
    if (seen.insert({a.start_boundary, a.end_boundary, a.connector}).second) {
      out.push_back(a);
    }
  };
  const int nb = pd.type.boundary;
  if (is_pants_family(pd.type)) {
    // B(pants) is finite: the seams between genuine boundaries and one self
    // arc per boundary; every double coset beyond these is a non-embedded
    // arc class, so the exact list is returned at every bound.
    for (int i = 0; i < nb; ++i) {
      for (int j = i + 1; j < nb; ++j) push(make_arc_class(pd, pres, i, j, Word::one()));
    }
    for (int i = 0; i < nb; ++i) {
      const Slot s = pd.boundary_slots[static_cast<std::size_t>(i)];
      const Word& other =
          pres.slot_words[static_cast<std::size_t>(s.pants)][static_cast<std::size_t>((s.hole + 1) % 3)];
      push(make_arc_class(pd, pres, i, i, other));
    }
  } else {
    for (int i = 0; i < nb; ++i) {
      for (int j = i; j < nb; ++j) {
        reduced_words(pres.num_generators, bound, [&](const Word& w) {
          if (i == j && w.empty()) return;
          try {
            push(make_arc_class(pd, pres, i, j, w));
          } catch (const Error&) {
            // inessential connector
          }
        });
        if (i != j) push(make_arc_class(pd, pres, i, j, Word::one()));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ArcClass& a, const ArcClass& b) {
    if (a.start_boundary != b.start_boundary) return a.start_boundary < b.start_boundary;
    if (a.end_boundary != b.end_boundary) return a.end_boundary < b.end_boundary;
    return a.connector < b.connector;
  });
  return out;
}

Word DoubledSurface::mirror(const Word& w) const {
  Word out;
  for (Letter l : w.letters()) {
    const int g = std::abs(l);
    const Word& img = mirror_gen[static_cast<std::size_t>(g - 1)];
    out = out * (l > 0 ? img : img.inverse());
  }
  return out;
}

DoubledSurface make_double(const SurfaceType& st, const PantsDecomposition& pd,
                           const Presentation& pres) {
  if (st.boundary < 1) throw NoBoundary("doubling needs at least one boundary");
  DoubledSurface dc;
  dc.base = st;
  dc.double_type = SurfaceType{2 * st.genus + st.boundary - 1, 2 * st.punctures, 0};
  dc.base_pants = pd.num_pants;
  dc.base_gluing_count = static_cast<int>(pd.gluings.size());
  dc.base_generators = pres.num_generators;

  PantsDecomposition& dd = dc.pants_double;
  dd.type = dc.double_type;
  dd.num_pants = 2 * pd.num_pants;
  const int n = pd.num_pants;
  auto mir = [n](const Slot& s) { return Slot{s.pants + n, s.hole}; };
  // Gluing order: base curves, then one per base boundary, then the mirror
  // copies of the base curves.  double_structure relies on this layout.
  for (const auto& gl : pd.gluings) dd.gluings.push_back(gl);
  for (const auto& s : pd.boundary_slots) dd.gluings.push_back({s, mir(s)});
  for (const auto& gl : pd.gluings) dd.gluings.push_back({mir(gl.a), mir(gl.b)});
  for (const auto& s : pd.puncture_slots) {
    dd.puncture_slots.push_back(s);
  }
  for (const auto& s : pd.puncture_slots) dd.puncture_slots.push_back(mir(s));
  dd.check();

  // Assembly plan: base plan verbatim; the mirror side hangs off the first
  // boundary gluing and reuses the mirrored base tree, re-rooted at the
  // mirror of the first boundary's pants.
  AssemblyPlan plan;
  plan.order = pres.plan.order;
  plan.parent_gluing = pres.plan.parent_gluing;
  plan.parent_gluing.resize(static_cast<std::size_t>(2 * n), -1);
  const int m = dc.base_gluing_count;
  const int mirror_root = pd.boundary_slots[0].pants + n;
  plan.order.push_back(mirror_root);
  plan.parent_gluing[static_cast<std::size_t>(mirror_root)] = m;  // first boundary gluing
  {
    // BFS over mirrored base tree edges only.
    std::set<int> tree_edges(pres.plan.parent_gluing.begin(), pres.plan.parent_gluing.end());
    tree_edges.erase(-1);
    std::vector<bool> visited(static_cast<std::size_t>(2 * n), false);
    for (int p = 0; p < n; ++p) visited[static_cast<std::size_t>(p)] = true;
    visited[static_cast<std::size_t>(mirror_root)] = true;
    std::deque<int> queue{mirror_root};
    while (!queue.empty()) {
      const int p = queue.front();
      queue.pop_front();
      for (int e : tree_edges) {
        const auto& gl = pd.gluings[static_cast<std::size_t>(e)];
        const int me = m + static_cast<int>(pd.boundary_slots.size()) + e;
        for (const auto& [from, to] :
             {std::pair{mir(gl.a), mir(gl.b)}, std::pair{mir(gl.b), mir(gl.a)}}) {
          if (from.pants == p && !visited[static_cast<std::size_t>(to.pants)]) {
            visited[static_cast<std::size_t>(to.pants)] = true;
            plan.parent_gluing[static_cast<std::size_t>(to.pants)] = me;
            plan.order.push_back(to.pants);
            queue.push_back(to.pants);
          }
        }
      }
    }
    if (static_cast<int>(plan.order.size()) != 2 * n) {
      throw Error("mirror assembly plan is incomplete");
    }
  }

  dc.pres = presentation_of(dd, plan, &pres, n, m);

  // Boundary crossing words t_i: stable letter of boundary gluing i (the
  // first one is the tree edge, so t_0 = 1).
  for (int i = 0; i < st.boundary; ++i) {
    const int sg = dc.pres.stable_gen[static_cast<std::size_t>(m + i)];
    dc.boundary_stable.push_back(sg == 0 ? Word::one() : Word::gen(sg));
  }

  // The involution on generators.
  dc.mirror_gen.resize(static_cast<std::size_t>(dc.pres.num_generators));
  for (int gid = 1; gid <= dc.pres.num_generators; ++gid) {
    const GenOrigin& org = dc.pres.gen_origin[static_cast<std::size_t>(gid - 1)];
    Word img;
    if (org.kind == GenOrigin::fresh_slot) {
      const Slot s{org.pants, org.hole};
      const Slot ms{dc.mirror_pants(org.pants), org.hole};
      (void)s;
      img = dc.pres.slot_word(ms);
    } else {
      const int e = org.gluing;
      if (e < m) {
        const int me = m + static_cast<int>(pd.boundary_slots.size()) + e;
        const int sg = dc.pres.stable_gen[static_cast<std::size_t>(me)];
        if (sg == 0) throw Error("mirrored gluing lost its stable letter");
        img = Word::gen(sg);
      } else if (e < m + st.boundary) {
        img = Word::gen(gid).inverse();  // boundary crossings reverse
      } else {
        const int be = e - m - st.boundary;
        const int sg = dc.pres.stable_gen[static_cast<std::size_t>(be)];
        img = sg == 0 ? Word::one() : Word::gen(sg);
      }
    }
    dc.mirror_gen[static_cast<std::size_t>(gid - 1)] = img;
  }
  return dc;
}

CurveClass double_arc(const DoubledSurface& dc, const ArcClass& a) {
  const Word& w = a.connector;
  const Word& ti = dc.boundary_stable[static_cast<std::size_t>(a.start_boundary)];
  const Word& tj = dc.boundary_stable[static_cast<std::size_t>(a.end_boundary)];
  const Word word = w * tj * dc.mirror(w).inverse() * ti.inverse();
  CurveClass c;
  c.word = canonical_cyclic(word);
  if (c.word.empty()) throw Error("doubled arc degenerated to a trivial class");
  return c;
}

}  // namespace teich
