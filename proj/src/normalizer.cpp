#include "paracone/normalizer.hpp"

#include <algorithm>

namespace paracone {

bool CosetRep::is_identity() const {
  return action_on_m == identity_mat((int)action_on_m.size());
}

std::vector<CosetRep> quotient_reps(const ChamberComplex& complex) {
  const RootSystem& sys = complex.system();
  const auto& marked = complex.marked();
  MarkedDiagram standard_diagram{sys.family(), sys.rank(),
                                 std::set<int>(marked.begin(), marked.end())};

  std::vector<CosetRep> reps;
  std::set<IntMat> seen;
  for (int id = 0; id < complex.size(); ++id) {
    const Chamber& ch = complex.chamber(id);
    if (!(ch.standardization.diagram == standard_diagram)) continue;
    const WeylElement& w = ch.standardization.to_standard;
    IntMat full = sys.weight_action(w);
    // w normalizes the Levi, so the marked block is the whole action on
    // M(L0) and the unmarked rows of marked columns vanish.
    std::set<int> mk(marked.begin(), marked.end());
    IntMat action(marked.size(), IntVec(marked.size(), 0));
    for (size_t i = 0; i < marked.size(); ++i)
      for (size_t j = 0; j < marked.size(); ++j)
        action[i][j] = full[marked[i] - 1][marked[j] - 1];
    for (int i = 1; i <= sys.rank(); ++i) {
      if (mk.count(i)) continue;
      for (size_t j = 0; j < marked.size(); ++j)
        internal_check(full[i - 1][marked[j] - 1] == 0,
                       "coset does not preserve M(L0)");
    }
    if (seen.insert(action).second) reps.push_back(CosetRep{w, std::move(action)});
  }
  internal_check(!reps.empty(), "quotient has no representatives");
  return reps;
}

int act_on_chamber(const ChamberComplex& complex, const CosetRep& rep, int id) {
  // The image is validated by membership in the complex index.
  const RootSystem& sys = complex.system();
  const Parabolic& p = complex.chamber(id).parabolic;
  Parabolic image;
  image.sys = p.sys;
  image.levi_unmarked = p.levi_unmarked;
  image.nilradical.reserve(p.nilradical.size());
  for (const auto& r : p.nilradical) image.nilradical.push_back(sys.apply(rep.element, r));
  std::sort(image.nilradical.begin(), image.nilradical.end());
  return complex.chamber_of(image);
}

CountReport verify_count(const ChamberComplex& complex) {
  CountReport r;
  r.s = complex.size();
  std::set<MarkedDiagram> diagrams;
  for (int id = 0; id < complex.size(); ++id)
    diagrams.insert(complex.chamber(id).standardization.diagram);
  r.n = (long long)diagrams.size();
  r.q = (long long)quotient_reps(complex).size();
  r.ok = r.s == r.n * r.q;
  return r;
}

DomainReport fundamental_domain_check(const ChamberComplex& complex, int start_id,
                                      bool birational) {
  DomainReport report;
  report.birational = birational;
  MovableUnion s1 = movable_union(complex, MovableMode::FirstKindOnly, start_id);
  report.s1_ids = s1.ids;

  std::vector<CosetRep> reps = quotient_reps(complex);

  for (int id = 0; id < complex.size() && report.cond_ii; ++id) {
    bool carried = false;
    for (const auto& rep : reps)
      if (s1.member(act_on_chamber(complex, rep, id))) {
        carried = true;
        break;
      }
    if (!carried) report.cond_ii = false;
  }

  for (size_t r = 0; r < reps.size(); ++r) {
    if (reps[r].is_identity()) continue;
    bool disjoint = true;
    for (int id : s1.ids)
      if (s1.member(act_on_chamber(complex, reps[r], id))) {
        disjoint = false;
        break;
      }
    report.cond_iii.emplace_back((int)r, disjoint);
    if (!disjoint) report.all_nontrivial_disjoint = false;
  }
  return report;
}

}  // namespace paracone
