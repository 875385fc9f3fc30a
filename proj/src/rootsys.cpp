#include "paracone/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace paracone {

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default: throw ConfigError(std::string("unknown family '") + c + "'");
  }
}

char family_char(Family f) { return static_cast<char>(f); }

bool valid_family_rank(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

IntMat cartan_matrix(Family f, int rank) {
  require(valid_family_rank(f, rank),
          std::string("invalid rank ") + std::to_string(rank) + " for family " + family_char(f));
  int n = rank;
  IntMat c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto chain = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      c[n - 2][n - 1] = -1;
      c[n - 1][n - 2] = -2;
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      c[n - 2][n - 1] = -2;
      c[n - 1][n - 2] = -1;
      break;
    case Family::D:
      for (int i = 0; i + 3 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 2);
      chain(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), vertex 2 hangs off vertex 4.
      chain(0, 2);
      chain(2, 3);
      chain(3, 4);
      chain(4, 5);
      if (n >= 7) chain(5, 6);
      if (n >= 8) chain(6, 7);
      chain(1, 3);
      break;
    case Family::F:
      chain(0, 1);
      c[1][2] = -1;
      c[2][1] = -2;
      chain(2, 3);
      break;
    case Family::G:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

std::vector<int> length_table(Family f, int rank) {
  std::vector<int> d(rank, 2);
  switch (f) {
    case Family::B:
      for (int i = 0; i + 1 < rank; ++i) d[i] = 4;
      break;
    case Family::C:
      d[rank - 1] = 4;
      break;
    case Family::F:
      d[0] = d[1] = 4;
      break;
    case Family::G:
      d[1] = 6;
      break;
    default:
      break;
  }
  return d;
}

int expected_root_count(Family f, int rank) {
  switch (f) {
    case Family::A: return rank * (rank + 1);
    case Family::B:
    case Family::C: return 2 * rank * rank;
    case Family::D: return 2 * rank * (rank - 1);
    case Family::E: return rank == 6 ? 72 : (rank == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

Root Root::negated() const {
  Root r = *this;
  for (int& x : r.coords) x = -x;
  return r;
}

std::string Root::str() const {
  std::string s = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

std::string RootSystem::name() const {
  return std::string(1, family_char(family_)) + std::to_string(rank_);
}

RootSystem RootSystem::build(Family f, int rank) {
  RootSystem sys;
  sys.family_ = f;
  sys.rank_ = rank;
  sys.cartan_ = cartan_matrix(f, rank);
  sys.len_sq_ = length_table(f, rank);
  auto inv = rat_inverse(to_rat(sys.cartan_));
  internal_check(inv.has_value(), "singular Cartan matrix");
  sys.cartan_inv_ = *inv;

  // Reflection closure of the simple roots.
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root a;
    a.coords.assign(rank, 0);
    a.coords[i] = 1;
    seen.insert(a.coords);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank; ++i) {
      Root s = sys.reflect(i, r);
      if (seen.insert(s.coords).second) queue.push_back(s);
    }
  }
  for (const auto& c : seen) sys.roots_.push_back(Root{c});
  std::sort(sys.roots_.begin(), sys.roots_.end());
  for (size_t i = 0; i < sys.roots_.size(); ++i)
    sys.root_index_[sys.roots_[i].coords] = (int)i;

  internal_check((int)sys.roots_.size() == expected_root_count(f, rank),
                 sys.name() + ": root count disagrees with the classification table");
  for (const auto& r : sys.roots_) {
    bool pos = false, neg = false;
    for (int x : r.coords) {
      if (x > 0) pos = true;
      if (x < 0) neg = true;
    }
    internal_check(pos != neg, sys.name() + ": root with mixed-sign coordinates");
    internal_check(sys.root_index_.count(r.negated().coords),
                   sys.name() + ": roots not closed under negation");
    if (pos) sys.positives_.push_back(r);
  }
  internal_check(sys.positives_.size() * 2 == sys.roots_.size(),
                 sys.name() + ": positive roots are not half of all roots");
  return sys;
}

bool RootSystem::is_root(const Root& r) const { return root_index_.count(r.coords) > 0; }

bool RootSystem::is_positive(const Root& r) const {
  for (int x : r.coords)
    if (x != 0) return x > 0;
  return false;
}

int RootSystem::root_length_sq(const Root& r) const {
  // (beta,beta) = sum_i sum_j b_i b_j d_i C[i][j], with d_i = len_sq/2.
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (r.coords[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += (long long)r.coords[i] * r.coords[j] * (len_sq_[i] / 2) * cartan_[i][j];
  }
  internal_check(s > 0, "nonpositive root length");
  return (int)s;
}

long long RootSystem::simple_pairing(int i, const Root& x) const {
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i - 1][j] * x.coords[j];
  return s;
}

IntVec RootSystem::coroot(const Root& beta) const {
  int lb = root_length_sq(beta);
  IntVec c(rank_);
  for (int j = 0; j < rank_; ++j) {
    long long num = (long long)beta.coords[j] * len_sq_[j];
    internal_check(num % lb == 0, "non-integral coroot coordinate");
    c[j] = num / lb;
  }
  return c;
}

Rat RootSystem::pairing(const RatVec& chi_fw, const Root& beta) const {
  require((int)chi_fw.size() == rank_, "character dimension mismatch");
  IntVec cv = coroot(beta);
  Rat s(0);
  for (int j = 0; j < rank_; ++j)
    if (cv[j] != 0 && !chi_fw[j].is_zero()) s += Rat(cv[j]) * chi_fw[j];
  return s;
}

Root RootSystem::reflect(int i, const Root& r) const {
  long long k = simple_pairing(i, r);
  Root s = r;
  s.coords[i - 1] -= (int)k;
  return s;
}

WeylElement RootSystem::identity_element() const { return WeylElement{identity_mat(rank_), {}}; }

WeylElement RootSystem::simple_reflection(int i) const {
  IntMat m = identity_mat(rank_);
  // column j = s_i(alpha_j) = alpha_j - C[i][j] alpha_i
  for (int j = 0; j < rank_; ++j) m[i - 1][j] -= cartan_[i - 1][j];
  return WeylElement{std::move(m), {i}};
}

WeylElement RootSystem::compose(const WeylElement& a, const WeylElement& b) const {
  WeylElement w;
  w.mat = mat_mul(a.mat, b.mat);
  if (!a.word.empty() || !b.word.empty()) {
    w.word = a.word;
    w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  }
  return w;
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
  auto inv = rat_inverse(to_rat(w.mat));
  internal_check(inv.has_value() && is_integral(*inv), "Weyl element not invertible over Z");
  WeylElement r;
  r.mat = to_int(*inv);
  r.word.assign(w.word.rbegin(), w.word.rend());
  return r;
}

Root RootSystem::apply(const WeylElement& w, const Root& r) const {
  require((int)r.coords.size() == rank_, "root dimension mismatch");
  IntVec v(r.coords.begin(), r.coords.end());
  IntVec im = mat_vec(w.mat, v);
  Root out;
  out.coords.assign(im.begin(), im.end());
  internal_check(is_root(out), "Weyl image is not a root");
  return out;
}

IntMat RootSystem::weight_action(const WeylElement& w) const {
  // Weight coordinates of x are <x, alpha_i^vee>; the change of basis from
  // simple-root to weight coordinates is the Cartan matrix itself.
  RatMat a = rat_mat_mul(rat_mat_mul(to_rat(cartan_), to_rat(w.mat)), cartan_inv_);
  internal_check(is_integral(a), "weight action not integral");
  return to_int(a);
}

RatVec RootSystem::apply_to_character(const WeylElement& w, const RatVec& chi_fw) const {
  IntMat a = weight_action(w);
  RatVec out(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (a[i][j] != 0 && !chi_fw[j].is_zero()) out[i] += Rat(a[i][j]) * chi_fw[j];
  return out;
}

long long RootSystem::height(const Root& r) const {
  long long h = 0;
  for (int x : r.coords) h += x;
  return h;
}

WeylElement RootSystem::weyl_to_standard(const std::vector<Root>& base) const {
  require((int)base.size() == rank_, "base has wrong size");
  RatMat bm(rank_, RatVec(rank_, Rat(0)));
  for (int j = 0; j < rank_; ++j) {
    require(is_root(base[j]), "base member is not a root");
    for (int i = 0; i < rank_; ++i) bm[i][j] = Rat(base[j].coords[i]);
  }
  auto bm_inv = rat_inverse(bm);
  require(bm_inv.has_value(), "input not a base: linearly dependent");

  // Positive system spanned by the base: roots with nonnegative coordinates
  // in it. Roots have one-sign coordinates in any base; mixed signs mean the
  // input is not a base at all.
  std::set<std::vector<int>> pos;
  for (const auto& r : roots_) {
    RatVec rv(rank_);
    for (int i = 0; i < rank_; ++i) rv[i] = Rat(r.coords[i]);
    RatVec coeff = mat_vec(*bm_inv, rv);
    bool nonneg = true, nonpos = true;
    for (const auto& c : coeff) {
      if (c.sign() > 0) nonpos = false;
      if (c.sign() < 0) nonneg = false;
    }
    require(nonneg != nonpos, "input not a base: mixed expansion signs");
    if (nonneg) pos.insert(r.coords);
  }
  internal_check(pos.size() == positives_.size(), "positive system size mismatch");

  // Greedy descent: while some standard simple root is negative for the
  // current system, reflect it away. Accumulates u with u(pos) = Phi+.
  WeylElement u = identity_element();
  for (;;) {
    int found = 0;
    for (int i = 1; i <= rank_; ++i) {
      Root neg_simple;
      neg_simple.coords.assign(rank_, 0);
      neg_simple.coords[i - 1] = -1;
      if (pos.count(neg_simple.coords)) {
        found = i;
        break;
      }
    }
    if (!found) break;
    std::set<std::vector<int>> next;
    for (const auto& c : pos) next.insert(reflect(found, Root{std::vector<int>(c.begin(), c.end())}).coords);
    pos = std::move(next);
    u = compose(simple_reflection(found), u);
  }
  // Now u(pos) = Phi+, so w = u^{-1} maps the standard base onto the input.
  WeylElement w = inverse(u);
  for (int j = 0; j < rank_; ++j) {
    Root a;
    a.coords.assign(rank_, 0);
    a.coords[j] = 1;
    Root im = apply(w, a);
    bool in_base = false;
    for (const auto& b : base)
      if (b == im) in_base = true;
    internal_check(in_base, "descent did not land on the requested base");
  }
  return w;
}

std::map<int, int> RootSystem::minus_w0_vertex_permutation(const std::vector<int>& component) const {
  require(!component.empty(), "empty component");
  std::set<int> verts(component.begin(), component.end());
  auto comp = component_of(component.front(), verts);
  require(comp.size() == verts.size(), "disconnected component");

  // Longest element of the sub-root-system: greedy descent from the
  // all-negative positive system using reflections inside the component.
  auto sub = subsystem_roots(verts);
  std::set<std::vector<int>> pos;
  for (const auto& r : sub)
    if (!is_positive(r)) pos.insert(r.coords);
  WeylElement u = identity_element();
  for (;;) {
    int found = 0;
    for (int i : comp) {
      Root neg_simple;
      neg_simple.coords.assign(rank_, 0);
      neg_simple.coords[i - 1] = -1;
      if (pos.count(neg_simple.coords)) {
        found = i;
        break;
      }
    }
    if (!found) break;
    std::set<std::vector<int>> next;
    for (const auto& c : pos) next.insert(reflect(found, Root{std::vector<int>(c.begin(), c.end())}).coords);
    pos = std::move(next);
    u = compose(simple_reflection(found), u);
  }
  WeylElement w0 = inverse(u);

  std::map<int, int> perm;
  for (int v : comp) {
    Root a;
    a.coords.assign(rank_, 0);
    a.coords[v - 1] = 1;
    Root im = apply(w0, a).negated();
    int target = -1;
    for (int j = 0; j < rank_; ++j)
      if (im.coords[j] == 1) target = j + 1;
    internal_check(target > 0 && verts.count(target), "-w0 image is not a component simple root");
    perm[v] = target;
  }
  return perm;
}

long long RootSystem::weyl_group_order(long long limit) const {
  std::set<IntMat> seen;
  std::deque<IntMat> queue;
  seen.insert(identity_mat(rank_));
  queue.push_back(identity_mat(rank_));
  std::vector<IntMat> gens;
  for (int i = 1; i <= rank_; ++i) gens.push_back(simple_reflection(i).mat);
  while (!queue.empty()) {
    IntMat m = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      IntMat n = mat_mul(g, m);
      if (seen.insert(n).second) {
        require((long long)seen.size() <= limit,
                name() + ": Weyl group order exceeds the configured limit " + std::to_string(limit));
        queue.push_back(std::move(n));
      }
    }
  }
  return (long long)seen.size();
}

bool RootSystem::adjacent(int i, int j) const {
  return i != j && cartan_[i - 1][j - 1] != 0;
}

std::vector<int> RootSystem::component_of(int v, const std::set<int>& allowed) const {
  require(allowed.count(v), "vertex not in the allowed set");
  std::set<int> seen{v};
  std::deque<int> queue{v};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : allowed)
      if (!seen.count(y) && adjacent(x, y)) {
        seen.insert(y);
        queue.push_back(y);
      }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

std::vector<std::vector<int>> RootSystem::components(const std::set<int>& vertices) const {
  std::vector<std::vector<int>> out;
  std::set<int> rest = vertices;
  while (!rest.empty()) {
    auto comp = component_of(*rest.begin(), rest);
    for (int v : comp) rest.erase(v);
    out.push_back(comp);
  }
  return out;
}

std::vector<Root> RootSystem::subsystem_roots(const std::set<int>& vertices) const {
  std::vector<Root> out;
  for (const auto& r : roots_) {
    bool ok = true;
    for (int j = 0; j < rank_; ++j)
      if (r.coords[j] != 0 && !vertices.count(j + 1)) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

std::vector<Root> RootSystem::simple_system_of(const std::vector<Root>& positive_system) const {
  std::set<std::vector<int>> pos;
  for (const auto& r : positive_system) pos.insert(r.coords);
  std::vector<Root> simples;
  for (const auto& r : positive_system) {
    bool decomposable = false;
    for (const auto& g : positive_system) {
      if (g == r) continue;
      std::vector<int> diff(rank_);
      for (int i = 0; i < rank_; ++i) diff[i] = r.coords[i] - g.coords[i];
      if (pos.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(r);
  }
  std::sort(simples.begin(), simples.end());
  return simples;
}

}  // namespace paracone
