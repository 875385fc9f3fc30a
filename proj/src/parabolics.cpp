#include "paracone/parabolics.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "paracone/lp.hpp"

namespace paracone {

namespace {

std::set<int> to_set(const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); }

std::vector<int> complement_of(int rank, const std::set<int>& s) {
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i)
    if (!s.count(i)) out.push_back(i);
  return out;
}

}  // namespace

Parabolic standard_parabolic(const RootSystem& sys, const std::vector<int>& levi_unmarked) {
  std::set<int> iset(levi_unmarked.begin(), levi_unmarked.end());
  for (int v : iset)
    require(v >= 1 && v <= sys.rank(), "Levi vertex out of range");
  Parabolic p;
  p.sys = &sys;
  p.levi_unmarked.assign(iset.begin(), iset.end());
  std::set<std::vector<int>> levi;
  for (const auto& r : sys.subsystem_roots(iset)) levi.insert(r.coords);
  for (const auto& r : sys.positive_roots())
    if (!levi.count(r.coords)) p.nilradical.push_back(r);
  std::sort(p.nilradical.begin(), p.nilradical.end());
  return p;
}

void validate_parabolic(const Parabolic& p) {
  const RootSystem& sys = *p.sys;
  std::set<int> iset = to_set(p.levi_unmarked);
  std::set<std::vector<int>> levi;
  for (const auto& r : sys.subsystem_roots(iset)) levi.insert(r.coords);
  std::set<std::vector<int>> nil;
  for (const auto& r : p.nilradical) {
    internal_check(sys.is_root(r), "nilradical member is not a root");
    internal_check(!levi.count(r.coords), "nilradical meets the Levi");
    nil.insert(r.coords);
  }
  internal_check(nil.size() == p.nilradical.size(), "duplicate nilradical roots");
  internal_check(2 * nil.size() + levi.size() == sys.all_roots().size(),
                 "nilradical does not complement the Levi");
  for (const auto& c : nil)
    internal_check(!nil.count(Root{c}.negated().coords),
                   "nilradical contains an opposite pair");
  // Closure: sums within nilradical + Levi stay there.
  std::vector<std::vector<int>> pool(nil.begin(), nil.end());
  pool.insert(pool.end(), levi.begin(), levi.end());
  int n = sys.rank();
  for (size_t a = 0; a < pool.size(); ++a)
    for (size_t b = a + 1; b < pool.size(); ++b) {
      std::vector<int> sum(n);
      for (int i = 0; i < n; ++i) sum[i] = pool[a][i] + pool[b][i];
      if (!sys.is_root(Root{sum})) continue;
      internal_check(nil.count(sum) || levi.count(sum),
                     "nilradical + Levi not closed under addition");
    }
}

Standardization marked_diagram_of(const Parabolic& p) {
  const RootSystem& sys = *p.sys;
  std::set<int> iset = to_set(p.levi_unmarked);
  std::set<std::vector<int>> levi_set;
  std::vector<Root> positive_system = p.nilradical;
  for (const auto& r : sys.subsystem_roots(iset)) {
    levi_set.insert(r.coords);
    if (sys.is_positive(r)) positive_system.push_back(r);
  }
  internal_check(positive_system.size() == sys.positive_roots().size(),
                 "nilradical + Levi positives is not half the roots");

  std::vector<Root> base = sys.simple_system_of(positive_system);
  internal_check((int)base.size() == sys.rank(), "adapted base has wrong size");
  WeylElement w = sys.weyl_to_standard(base);

  std::set<int> unmarked;
  for (int i = 1; i <= sys.rank(); ++i) {
    Root a;
    a.coords.assign(sys.rank(), 0);
    a.coords[i - 1] = 1;
    if (levi_set.count(sys.apply(w, a).coords)) unmarked.insert(i);
  }
  internal_check(unmarked.size() == iset.size(), "standardized Levi has wrong rank");

  Standardization out;
  out.diagram = MarkedDiagram{sys.family(), sys.rank(), {}};
  for (int i = 1; i <= sys.rank(); ++i)
    if (!unmarked.count(i)) out.diagram.marked.insert(i);
  out.to_standard = w;

  Parabolic check = apply_weyl(w, standard_parabolic(sys, std::vector<int>(unmarked.begin(), unmarked.end())));
  internal_check(check.nilradical == p.nilradical,
                 "standardization does not transport back to the parabolic");
  return out;
}

Parabolic opposite(const Parabolic& p) {
  Parabolic q = p;
  for (auto& r : q.nilradical) r = r.negated();
  std::sort(q.nilradical.begin(), q.nilradical.end());
  return q;
}

Parabolic apply_weyl(const WeylElement& w, const Parabolic& p) {
  const RootSystem& sys = *p.sys;
  Parabolic q;
  q.sys = p.sys;
  q.nilradical.reserve(p.nilradical.size());
  for (const auto& r : p.nilradical) q.nilradical.push_back(sys.apply(w, r));
  std::sort(q.nilradical.begin(), q.nilradical.end());
  std::set<std::vector<int>> nil;
  for (const auto& r : q.nilradical) nil.insert(r.coords);
  std::set<int> unmarked;
  for (int i = 1; i <= sys.rank(); ++i) {
    Root a;
    a.coords.assign(sys.rank(), 0);
    a.coords[i - 1] = 1;
    if (!nil.count(a.coords) && !nil.count(a.negated().coords)) unmarked.insert(i);
  }
  q.levi_unmarked.assign(unmarked.begin(), unmarked.end());
  validate_parabolic(q);
  return q;
}

Parabolic twist_with(const Parabolic& p, const Standardization& info, int v) {
  const RootSystem& sys = *p.sys;
  require(info.diagram.marked.count(v) > 0,
          "twist vertex " + std::to_string(v) + " is not a facet label");
  std::set<int> bar = info.diagram.unmarked();
  bar.insert(v);
  std::vector<int> comp = sys.component_of(v, bar);

  // Sub-root-system of the component, transported to p's frame.
  std::set<std::vector<int>> j_roots;
  for (const auto& r : sys.subsystem_roots(to_set(comp)))
    j_roots.insert(sys.apply(info.to_standard, r).coords);

  Parabolic q;
  q.sys = p.sys;
  q.levi_unmarked = p.levi_unmarked;
  for (const auto& r : p.nilradical)
    q.nilradical.push_back(j_roots.count(r.coords) ? r.negated() : r);
  std::sort(q.nilradical.begin(), q.nilradical.end());
  validate_parabolic(q);
  return q;
}

Parabolic twist(const Parabolic& p, int v) { return twist_with(p, marked_diagram_of(p), v); }

std::vector<Parabolic> enumerate_S(const Parabolic& seed) {
  validate_parabolic(seed);
  std::map<std::vector<Root>, int> seen;
  std::deque<Parabolic> queue;
  seen[seed.nilradical] = 0;
  queue.push_back(seed);
  std::vector<Parabolic> found{seed};
  while (!queue.empty()) {
    Parabolic p = queue.front();
    queue.pop_front();
    Standardization info = marked_diagram_of(p);
    for (int v : info.diagram.marked) {
      Parabolic q = twist_with(p, info, v);
      if (seen.emplace(q.nilradical, (int)found.size()).second) {
        found.push_back(q);
        queue.push_back(q);
      }
    }
  }
  std::sort(found.begin(), found.end());

  std::vector<Parabolic> oracle = chamber_oracle(*seed.sys, seed.levi_unmarked);
  bool match = oracle.size() == found.size();
  if (match)
    for (size_t i = 0; i < oracle.size(); ++i)
      if (!(oracle[i].nilradical == found[i].nilradical)) match = false;
  internal_check(match,
                 "twist closure disagrees with the chamber oracle: " +
                     std::to_string(found.size()) + " twisted vs " +
                     std::to_string(oracle.size()) + " chambers");
  return found;
}

std::vector<Parabolic> chamber_oracle(const RootSystem& sys,
                                      const std::vector<int>& levi_unmarked) {
  std::set<int> iset(levi_unmarked.begin(), levi_unmarked.end());
  std::vector<int> marked = complement_of(sys.rank(), iset);
  std::set<std::vector<int>> levi;
  for (const auto& r : sys.subsystem_roots(iset)) levi.insert(r.coords);

  // Representatives of the +/- pairs outside the Levi, with their projected
  // functionals on the character subspace coordinates.
  std::vector<Root> reps;
  std::vector<int> rep_hyp;
  std::vector<int> rep_flip;
  std::map<IntVec, int> hyp_index;
  std::vector<IntVec> hyps;
  for (const auto& r : sys.positive_roots()) {
    if (levi.count(r.coords)) continue;
    IntVec proj(marked.size());
    for (size_t k = 0; k < marked.size(); ++k) proj[k] = r.coords[marked[k] - 1];
    IntVec prim = primitive(proj);
    bool zero = true;
    for (long long x : prim)
      if (x) zero = false;
    internal_check(!zero, "non-Levi root projects to zero");
    int flip = 1;
    for (long long x : prim) {
      if (x == 0) continue;
      if (x < 0) {
        flip = -1;
        for (long long& y : prim) y = -y;
      }
      break;
    }
    auto [it, fresh] = hyp_index.emplace(prim, (int)hyps.size());
    if (fresh) hyps.push_back(prim);
    reps.push_back(r);
    rep_hyp.push_back(it->second);
    rep_flip.push_back(flip);
  }

  int nh = (int)hyps.size();
  auto feasible = [&](const std::vector<int>& sign) {
    RatMat g(nh, RatVec(marked.size()));
    RatVec b(nh, Rat(1));
    for (int h = 0; h < nh; ++h)
      for (size_t k = 0; k < marked.size(); ++k)
        g[h][k] = Rat(sign[h] * hyps[h][k]);
    return lp_feasible_point_ineq(g, b).has_value();
  };

  // Start chamber: the all-ones coweight, positive on every nilradical root
  // of the standard parabolic.
  std::vector<int> start(nh);
  for (int h = 0; h < nh; ++h) {
    long long s = 0;
    for (long long x : hyps[h]) s += x;
    internal_check(s != 0, "start point lies on a hyperplane");
    start[h] = s > 0 ? 1 : -1;
  }

  std::set<std::vector<int>> seen{start};
  std::deque<std::vector<int>> queue{start};
  std::vector<std::vector<int>> chambers{start};
  while (!queue.empty()) {
    std::vector<int> sv = queue.front();
    queue.pop_front();
    for (int h = 0; h < nh; ++h) {
      std::vector<int> next = sv;
      next[h] = -next[h];
      if (seen.count(next)) continue;
      if (!feasible(next)) continue;
      seen.insert(next);
      chambers.push_back(next);
      queue.push_back(next);
    }
  }

  std::vector<Parabolic> out;
  out.reserve(chambers.size());
  for (const auto& sv : chambers) {
    Parabolic p;
    p.sys = &sys;
    p.levi_unmarked.assign(iset.begin(), iset.end());
    for (size_t r = 0; r < reps.size(); ++r) {
      int s = sv[rep_hyp[r]] * rep_flip[r];
      p.nilradical.push_back(s > 0 ? reps[r] : reps[r].negated());
    }
    std::sort(p.nilradical.begin(), p.nilradical.end());
    validate_parabolic(p);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConjugacyClasses conjugacy_classes(const std::vector<Parabolic>& s) {
  ConjugacyClasses out;
  std::map<MarkedDiagram, int> idx;
  for (size_t i = 0; i < s.size(); ++i) {
    MarkedDiagram d = marked_diagram_of(s[i]).diagram;
    auto [it, fresh] = idx.emplace(d, (int)out.diagrams.size());
    if (fresh) {
      out.diagrams.push_back(d);
      out.members.emplace_back();
    }
    out.members[it->second].push_back((int)i);
  }
  return out;
}

}  // namespace paracone
