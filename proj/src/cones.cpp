#include "paracone/cones.hpp"

#include <algorithm>
#include <deque>

#include "paracone/lp.hpp"

namespace paracone {

CharacterVector character_on_marked(const RootSystem& sys, const std::vector<int>& marked,
                                    const RatVec& coords) {
  require(coords.size() == marked.size(), "character needs one coordinate per marked vertex");
  CharacterVector chi;
  chi.fw.assign(sys.rank(), Rat(0));
  for (size_t k = 0; k < marked.size(); ++k) chi.fw[marked[k] - 1] = coords[k];
  return chi;
}

namespace {

IntVec project_coroot(const RootSystem& sys, const std::vector<int>& marked, const Root& r) {
  IntVec cv = sys.coroot(r);
  IntVec out(marked.size());
  for (size_t k = 0; k < marked.size(); ++k) out[k] = cv[marked[k] - 1];
  return out;
}

}  // namespace

PolyhedralCone nef_cone(const Parabolic& p, const Standardization& info,
                        const std::vector<int>& marked) {
  const RootSystem& sys = *p.sys;
  size_t rho = marked.size();

  // Inequality system: one projected coroot per nilradical root, reduced to
  // primitive covectors without repetition.
  std::vector<IntVec> candidates;
  std::set<IntVec> cand_set;
  for (const auto& r : p.nilradical) {
    IntVec c = primitive(project_coroot(sys, marked, r));
    bool zero = true;
    for (long long x : c)
      if (x) zero = false;
    internal_check(!zero, "nilradical coroot projects to zero");
    if (cand_set.insert(c).second) candidates.push_back(c);
  }
  for (const auto& c : candidates) {
    IntVec neg = c;
    for (long long& x : neg) x = -x;
    internal_check(!cand_set.count(neg), "nef cone degenerates to a hyperplane");
  }

  // Facet labels: the transported simple coroots of the standardized
  // diagram's marked vertices.
  std::map<int, IntVec> label_normal;
  std::set<IntVec> label_set;
  for (int v : info.diagram.marked) {
    Root a;
    a.coords.assign(sys.rank(), 0);
    a.coords[v - 1] = 1;
    Root image = sys.apply(info.to_standard, a);
    IntVec n = primitive(project_coroot(sys, marked, image));
    internal_check(cand_set.count(n), "facet label covector missing from the system");
    label_normal[v] = n;
    label_set.insert(n);
  }
  internal_check(label_set.size() == rho, "facet labels collide");

  // Extremal generators of the dual cone = facet normals.
  std::set<IntVec> extremal;
  for (size_t i = 0; i < candidates.size(); ++i) {
    std::vector<IntVec> others;
    for (size_t j = 0; j < candidates.size(); ++j)
      if (j != i) others.push_back(candidates[j]);
    if (!lp_in_cone(others, candidates[i])) extremal.insert(candidates[i]);
  }
  internal_check(extremal == label_set,
                 "facet normals disagree with the marked-vertex labels");

  PolyhedralCone cone;
  for (const auto& [v, n] : label_normal) {
    cone.facet_vertices.push_back(v);
    cone.normals.push_back(n);
  }

  // Rays: dual basis of the normal matrix, primitive integer.
  RatMat nm(rho, RatVec(rho));
  for (size_t i = 0; i < rho; ++i)
    for (size_t j = 0; j < rho; ++j) nm[i][j] = Rat(cone.normals[i][j]);
  auto inv = rat_inverse(nm);
  internal_check(inv.has_value(), "facet normals are linearly dependent");
  for (size_t j = 0; j < rho; ++j) {
    RatVec col(rho);
    for (size_t i = 0; i < rho; ++i) col[i] = (*inv)[i][j];
    cone.rays.push_back(primitive_of(col));
  }
  for (const auto& c : candidates)
    for (const auto& ray : cone.rays)
      internal_check(dot(c, ray) >= 0, "ray escapes the inequality system");
  return cone;
}

PolyhedralCone nef_cone(const Parabolic& p) {
  std::set<int> iset(p.levi_unmarked.begin(), p.levi_unmarked.end());
  std::vector<int> marked;
  for (int i = 1; i <= p.sys->rank(); ++i)
    if (!iset.count(i)) marked.push_back(i);
  return nef_cone(p, marked_diagram_of(p), marked);
}

ChamberComplex ChamberComplex::build(const RootSystem& sys,
                                     const std::vector<int>& levi_unmarked) {
  ChamberComplex cc;
  cc.sys_ = &sys;
  std::set<int> iset(levi_unmarked.begin(), levi_unmarked.end());
  cc.levi_unmarked_.assign(iset.begin(), iset.end());
  for (int i = 1; i <= sys.rank(); ++i)
    if (!iset.count(i)) cc.marked_.push_back(i);
  require(!cc.marked_.empty(), "no marked vertices: the parabolic is the whole algebra");

  Parabolic p0 = standard_parabolic(sys, cc.levi_unmarked_);
  std::vector<Parabolic> s = enumerate_S(p0);

  cc.chambers_.reserve(s.size());
  for (auto& p : s) {
    Chamber ch;
    ch.standardization = marked_diagram_of(p);
    ch.cone = nef_cone(p, ch.standardization, cc.marked_);
    ch.parabolic = std::move(p);
    cc.index_[ch.parabolic.nilradical] = (int)cc.chambers_.size();
    cc.chambers_.push_back(std::move(ch));
  }
  cc.standard_id_ = cc.chamber_of(p0);

  for (auto& ch : cc.chambers_) {
    Parabolic opp = opposite(ch.parabolic);
    auto it = cc.index_.find(opp.nilradical);
    internal_check(it != cc.index_.end(), "opposite parabolic missing from S(l0)");
    ch.opposite = it->second;
  }

  // Walls: cross every facet by its twist and pair the two sides.
  cc.wall_index_.resize(cc.chambers_.size());
  std::map<std::pair<int, int>, std::pair<int, int>> half;  // (a,b) -> (va, wall idx or -1)
  for (int a = 0; a < (int)cc.chambers_.size(); ++a) {
    const Chamber& ca = cc.chambers_[a];
    for (int v : ca.standardization.diagram.marked) {
      Parabolic q = twist_with(ca.parabolic, ca.standardization, v);
      auto it = cc.index_.find(q.nilradical);
      internal_check(it != cc.index_.end(), "twist image missing from S(l0)");
      int b = it->second;
      internal_check(b != a, "twist fixed the chamber");
      IntVec normal;
      for (size_t i = 0; i < ca.cone.facet_vertices.size(); ++i)
        if (ca.cone.facet_vertices[i] == v) normal = ca.cone.normals[i];
      internal_check(!normal.empty(), "twist vertex has no facet");

      SingleMarkedClass cls = classify(single_marked_subdiagram(ca.standardization.diagram, v));
      auto key = std::minmax(a, b);
      auto found = half.find(key);
      if (found == half.end()) {
        Wall w;
        w.a = a;
        w.b = b;
        w.va = v;
        w.kind = cls.kind;
        w.flop = flop_label(cls);
        if (cls.label.canonical_alias) w.flop.canonical_alias = cls.label.canonical_alias;
        w.normal_from_a = normal;
        half[key] = {v, (int)cc.walls_.size()};
        cc.wall_index_[a][v] = (int)cc.walls_.size();
        cc.walls_.push_back(std::move(w));
      } else {
        Wall& w = cc.walls_[found->second.second];
        internal_check(w.b == a && w.a == b, "wall endpoints inconsistent");
        w.vb = v;
        internal_check(w.kind == cls.kind, "wall kinds disagree across the wall");
        internal_check(w.flop == flop_label(cls), "wall flop labels disagree");
        IntVec neg = normal;
        for (long long& x : neg) x = -x;
        internal_check(w.normal_from_a == neg, "shared facet normals are not opposite");
        cc.wall_index_[a][v] = found->second.second;
      }
    }
  }
  for (const auto& w : cc.walls_)
    internal_check(w.vb != 0, "wall seen from one side only");
  for (int a = 0; a < (int)cc.chambers_.size(); ++a)
    internal_check(cc.wall_index_[a].size() == cc.chambers_[a].standardization.diagram.marked.size(),
                   "facet count disagrees with marked vertex count");
  return cc;
}

int ChamberComplex::chamber_of(const Parabolic& p) const {
  auto it = index_.find(p.nilradical);
  internal_check(it != index_.end(), "parabolic is not a chamber of this complex");
  return it->second;
}

RatVec ChamberComplex::restrict(const CharacterVector& chi) const {
  require((int)chi.fw.size() == sys_->rank(), "character has wrong dimension");
  std::set<int> mk(marked_.begin(), marked_.end());
  for (int i = 1; i <= sys_->rank(); ++i)
    if (!mk.count(i))
      require(chi.fw[i - 1].is_zero(),
              "character does not lie in M(L0): nonzero coordinate at unmarked vertex " +
                  std::to_string(i));
  RatVec out(marked_.size());
  for (size_t k = 0; k < marked_.size(); ++k) out[k] = chi.fw[marked_[k] - 1];
  return out;
}

IntVec ChamberComplex::restrict_scaled(const CharacterVector& chi) const {
  RatVec x = restrict(chi);
  long long l = 1;
  for (const auto& c : x) l = std::lcm(l, c.den);
  IntVec out(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    out[i] = detail::narrow((__int128)x[i].num * (l / x[i].den));
  return out;
}

bool ChamberComplex::closed_contains(int id, const RatVec& chi_marked) const {
  for (const auto& n : chambers_[id].cone.normals)
    if (dot(n, chi_marked).sign() < 0) return false;
  return true;
}

bool ChamberComplex::interior_contains(int id, const RatVec& chi_marked) const {
  for (const auto& n : chambers_[id].cone.normals)
    if (dot(n, chi_marked).sign() <= 0) return false;
  return true;
}

bool ChamberComplex::closed_contains(int id, const IntVec& chi_scaled) const {
  for (const auto& n : chambers_[id].cone.normals)
    if (dot(n, chi_scaled) < 0) return false;
  return true;
}

bool ChamberComplex::interior_contains(int id, const IntVec& chi_scaled) const {
  for (const auto& n : chambers_[id].cone.normals)
    if (dot(n, chi_scaled) <= 0) return false;
  return true;
}

int ChamberComplex::locate(const CharacterVector& chi) const {
  IntVec x = restrict_scaled(chi);
  for (int id = 0; id < (int)chambers_.size(); ++id)
    if (closed_contains(id, x)) return id;
  throw InternalError("character escaped the chamber cover");
}

std::vector<int> ChamberComplex::all_closed_containing(const CharacterVector& chi) const {
  IntVec x = restrict_scaled(chi);
  std::vector<int> out;
  for (int id = 0; id < (int)chambers_.size(); ++id)
    if (closed_contains(id, x)) out.push_back(id);
  return out;
}

std::vector<int> ChamberComplex::all_interior_containing(const CharacterVector& chi) const {
  IntVec x = restrict_scaled(chi);
  std::vector<int> out;
  for (int id = 0; id < (int)chambers_.size(); ++id)
    if (interior_contains(id, x)) out.push_back(id);
  return out;
}

const Wall& ChamberComplex::wall_at(int id, int vertex) const {
  auto it = wall_index_[id].find(vertex);
  internal_check(it != wall_index_[id].end(), "no wall at this facet label");
  return walls_[it->second];
}

int ChamberComplex::neighbor(int id, int vertex) const {
  const Wall& w = wall_at(id, vertex);
  return w.a == id ? w.b : w.a;
}

bool MovableUnion::member(int id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

MovableUnion movable_union(const ChamberComplex& complex, MovableMode mode, int start_id) {
  auto allowed = [&](TwistKind k) {
    if (k == TwistKind::FirstKind) return true;
    return mode == MovableMode::FirstAndSmall && k == TwistKind::SecondSmall;
  };
  std::set<int> seen{start_id};
  std::deque<int> queue{start_id};
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    for (int v : complex.chamber(id).standardization.diagram.marked) {
      const Wall& w = complex.wall_at(id, v);
      if (!allowed(w.kind)) continue;
      int other = w.a == id ? w.b : w.a;
      if (seen.insert(other).second) queue.push_back(other);
    }
  }
  MovableUnion u;
  u.mode = mode;
  u.ids.assign(seen.begin(), seen.end());
  return u;
}

bool union_contains(const ChamberComplex& complex, const MovableUnion& u,
                    const CharacterVector& chi) {
  IntVec x = complex.restrict_scaled(chi);
  for (int id : u.ids)
    if (complex.closed_contains(id, x)) return true;
  return false;
}

}  // namespace paracone
