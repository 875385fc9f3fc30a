#include "paracone/flopwalk.hpp"

#include <algorithm>

namespace paracone {

WalkTrace walk(const ChamberComplex& complex, int start_id, const CharacterVector& chi) {
  IntVec x = complex.restrict_scaled(chi);
  WalkTrace trace;
  trace.start = start_id;
  trace.chi = chi;
  std::set<int> visited{start_id};
  int cur = start_id;
  for (;;) {
    const Chamber& ch = complex.chamber(cur);
    int cross = 0;
    for (size_t i = 0; i < ch.cone.normals.size(); ++i) {
      if (dot(ch.cone.normals[i], x) >= 0) continue;
      int v = ch.cone.facet_vertices[i];
      if (cross == 0 || v < cross) cross = v;
    }
    if (cross == 0) break;
    const Wall& w = complex.wall_at(cur, cross);
    int next = w.a == cur ? w.b : w.a;
    internal_check(visited.insert(next).second,
                   "walk revisited a chamber; the termination argument is violated");
    TwistRecord rec;
    rec.from = cur;
    rec.to = next;
    rec.vertex = cross;
    rec.kind = w.kind;
    rec.flop = w.flop;
    trace.steps.push_back(rec);
    cur = next;
  }
  trace.final = cur;
  internal_check(complex.closed_contains(trace.final, x),
                 "walk stopped outside the nef cone");
  return trace;
}

FiberSummary central_fiber_summary(const WalkTrace& trace) {
  FiberSummary sum;
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const TwistRecord& s = trace.steps[i];
    FiberStep f;
    f.index = (int)i;
    f.mukai_flop = s.kind != TwistKind::SecondDivisorial;
    f.label = f.mukai_flop ? s.flop.str() : "divisorial";
    if (!f.mukai_flop) sum.stays_in_sstar = false;
    sum.steps.push_back(std::move(f));
  }
  return sum;
}

CharacterVector random_character(const ChamberComplex& complex, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  RatVec coords(complex.marked().size());
  for (auto& c : coords) c = Rat(num(rng), den(rng));
  return character_on_marked(complex.system(), complex.marked(), coords);
}

CharacterVector random_interior_character(const ChamberComplex& complex, int id,
                                          std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(1, 9);
  const PolyhedralCone& cone = complex.chamber(id).cone;
  size_t rho = complex.marked().size();
  RatVec coords(rho, Rat(0));
  for (const auto& ray : cone.rays) {
    int c = coeff(rng);
    for (size_t k = 0; k < rho; ++k) coords[k] += Rat(c * ray[k]);
  }
  return character_on_marked(complex.system(), complex.marked(), coords);
}

MovableWalkReport movable_walk_property(const ChamberComplex& complex, int start_id,
                                        int samples, uint64_t seed) {
  MovableWalkReport report;
  report.samples = samples;
  MovableUnion sstar = movable_union(complex, MovableMode::FirstAndSmall, start_id);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, sstar.ids.size() - 1);
  for (int i = 0; i < samples; ++i) {
    int target = sstar.ids[pick(rng)];
    CharacterVector chi = random_interior_character(complex, target, rng);
    WalkTrace trace = walk(complex, start_id, chi);
    bool clean = true;
    for (const auto& s : trace.steps)
      if (s.kind == TwistKind::SecondDivisorial) clean = false;
    if (!clean) {
      ++report.failures;
      if (!report.witness) report.witness = chi;
    }
  }
  return report;
}

}  // namespace paracone
