#include "paracone/verification.hpp"

#include <algorithm>

namespace paracone {

namespace {

std::vector<int> complement(int rank, const std::vector<int>& marked) {
  std::set<int> m(marked.begin(), marked.end());
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i)
    if (!m.count(i)) out.push_back(i);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Instance::Instance(Family family, int rank, std::vector<int> marked) {
  require(!marked.empty(), "marking must be nonempty");
  std::set<int> m(marked.begin(), marked.end());
  for (int v : m)
    require(v >= 1 && v <= rank, "marked vertex out of range");
  sys_ = std::make_unique<RootSystem>(RootSystem::build(family, rank));
  marked_.assign(m.begin(), m.end());
  complex_ = std::make_unique<ChamberComplex>(
      ChamberComplex::build(*sys_, complement(rank, marked_)));
}

std::string Instance::label() const {
  return sys_->name() + "{" + join(marked_) + "}";
}

bool Instance::classical() const {
  Family f = sys_->family();
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

CheckResult Instance::check_counting() const {
  CountReport r = verify_count(*complex_);
  std::map<MarkedDiagram, long long> class_sizes;
  for (int i = 0; i < complex_->size(); ++i)
    ++class_sizes[complex_->chamber(i).standardization.diagram];
  bool uniform = true;
  for (const auto& [d, size] : class_sizes)
    if (size != r.q) uniform = false;
  bool pass = r.ok && uniform && (long long)class_sizes.size() == r.n;
  return {"counting", pass,
          "S=" + std::to_string(r.s) + " N=" + std::to_string(r.n) +
              " q=" + std::to_string(r.q) + (uniform ? "" : " (class sizes not uniform)")};
}

CheckResult Instance::check_oracle_equivalence() const {
  std::vector<Parabolic> oracle = chamber_oracle(*sys_, complex_->levi_unmarked());
  bool pass = (int)oracle.size() == complex_->size();
  if (pass)
    for (size_t i = 0; i < oracle.size(); ++i)
      if (!(oracle[i].nilradical == complex_->chamber((int)i).parabolic.nilradical))
        pass = false;
  return {"oracle-equivalence", pass,
          std::to_string(complex_->size()) + " twisted vs " +
              std::to_string(oracle.size()) + " chambers"};
}

CheckResult Instance::check_antipodal() const {
  bool pass = true;
  for (int id = 0; id < complex_->size() && pass; ++id) {
    const Chamber& ch = complex_->chamber(id);
    const Chamber& op = complex_->chamber(ch.opposite);
    if (complex_->chamber(op.opposite).parabolic == ch.parabolic) {
      std::set<IntVec> neg;
      for (const auto& n : ch.cone.normals) {
        IntVec v = n;
        for (long long& x : v) x = -x;
        neg.insert(v);
      }
      std::set<IntVec> theirs(op.cone.normals.begin(), op.cone.normals.end());
      if (neg != theirs) pass = false;
    } else {
      pass = false;
    }
  }
  return {"antipodal", pass, "opposite chambers carry the negated nef cones"};
}

CheckResult Instance::check_cover(int samples, uint64_t seed) const {
  std::mt19937_64 rng(seed);
  int failures = 0;
  std::string witness;
  for (int i = 0; i < samples; ++i) {
    CharacterVector chi = random_character(*complex_, rng);
    auto closed = complex_->all_closed_containing(chi);
    auto open = complex_->all_interior_containing(chi);
    if (closed.empty() || open.size() > 1) {
      ++failures;
      if (witness.empty()) {
        for (const auto& c : chi.fw) witness += c.str() + " ";
      }
    }
  }
  return {"cover", failures == 0,
          std::to_string(samples) + " samples, " + std::to_string(failures) +
              " failures" + (witness.empty() ? "" : " (witness " + witness + ")")};
}

CheckResult Instance::check_equivariance() const {
  std::vector<CosetRep> reps = quotient_reps(*complex_);
  size_t rho = complex_->marked().size();
  bool pass = true;
  for (const auto& rep : reps) {
    auto inv = rat_inverse(to_rat(rep.action_on_m));
    internal_check(inv.has_value(), "coset action is singular");
    // Covectors transform by the inverse transpose.
    RatMat dual(rho, RatVec(rho));
    for (size_t i = 0; i < rho; ++i)
      for (size_t j = 0; j < rho; ++j) dual[i][j] = (*inv)[j][i];
    for (int id = 0; id < complex_->size() && pass; ++id) {
      const Chamber& ch = complex_->chamber(id);
      int image = act_on_chamber(*complex_, rep, id);
      const Chamber& im = complex_->chamber(image);
      for (size_t f = 0; f < ch.cone.normals.size(); ++f) {
        RatVec moved(rho, Rat(0));
        for (size_t i = 0; i < rho; ++i)
          for (size_t j = 0; j < rho; ++j)
            moved[i] += dual[i][j] * Rat(ch.cone.normals[f][j]);
        IntVec expect = primitive_of(moved);
        int v = ch.cone.facet_vertices[f];
        bool found = false;
        for (size_t g = 0; g < im.cone.normals.size(); ++g)
          if (im.cone.facet_vertices[g] == v && im.cone.normals[g] == expect) found = true;
        if (!found) pass = false;
      }
    }
    if (!pass) break;
  }
  return {"equivariance", pass,
          std::to_string(reps.size()) + " cosets transport all nef cones with labels"};
}

CheckResult Instance::check_adjacency_twist() const {
  bool pass = true;
  for (const auto& w : complex_->walls()) {
    const Chamber& ca = complex_->chamber(w.a);
    const Chamber& cb = complex_->chamber(w.b);
    Parabolic fwd = twist_with(ca.parabolic, ca.standardization, w.va);
    Parabolic bwd = twist_with(cb.parabolic, cb.standardization, w.vb);
    if (!(fwd == cb.parabolic) || !(bwd == ca.parabolic)) pass = false;
  }
  return {"adjacency-twist", pass,
          std::to_string(complex_->walls().size()) + " walls exchanged by their twists"};
}

CheckResult Instance::check_walk_agreement(int samples, uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, complex_->size() - 1);
  int failures = 0;
  long long max_len = 0;
  for (int i = 0; i < samples; ++i) {
    int target = pick(rng);
    CharacterVector chi = random_interior_character(*complex_, target, rng);
    WalkTrace trace = walk(*complex_, complex_->standard_id(), chi);
    max_len = std::max(max_len, (long long)trace.steps.size());
    if (trace.final != target) ++failures;
    if (complex_->locate(chi) != target) ++failures;
    if ((int)trace.steps.size() > complex_->size() - 1) ++failures;
  }
  return {"walk-agreement", failures == 0,
          std::to_string(samples) + " samples, longest walk " + std::to_string(max_len) +
              ", " + std::to_string(failures) + " failures"};
}

CheckResult Instance::check_movable_property(int samples, uint64_t seed) const {
  MovableWalkReport r = movable_walk_property(*complex_, complex_->standard_id(), samples, seed);
  return {"movable-walk", r.failures == 0,
          std::to_string(r.samples) + " movable-interior samples, " +
              std::to_string(r.failures) + " divisorial crossings"};
}

CheckResult Instance::check_dimension_identity() const {
  if (!classical())
    return {"dimension-identity", true, "skipped: exceptional family"};
  bool pass = true;
  std::string details;
  for (int id = 0; id < complex_->size(); ++id) {
    const Chamber& ch = complex_->chamber(id);
    FlagType flag = flag_type_of(ch.standardization.diagram);
    JordanType jt = richardson_jordan_type(sys_->family(), flag);
    long long dim = orbit_dimension(jt);
    long long expect = 2 * (long long)ch.parabolic.nilradical.size();
    if (dim != expect) {
      pass = false;
      details = "chamber " + std::to_string(id) + ": dim " + std::to_string(dim) +
                " vs 2|N| = " + std::to_string(expect);
      break;
    }
    if (id == 0)
      details = "jordan [" + jt.str() + "] dim " + std::to_string(dim) + " = 2|N|";
  }
  return {"dimension-identity", pass, details};
}

CheckResult check_collapse_vectors(int max_n) {
  // Richardson types of the small flags and their codimension-2 neighbors.
  bool pass = true;
  std::string details;
  int cases = 0;
  auto fail = [&](const std::string& msg) {
    pass = false;
    if (details.empty()) details = msg;
  };

  for (int n = 2; n <= max_n; ++n) {
    for (int k = 2; k <= n; k += 2) {
      if (3 * k <= 2 * n + 1) continue;  // B small range: k even, k > (2n+1)/3
      FlagType flag;
      flag.blocks = {k, 2 * n - 2 * k + 1, k};
      flag.isotropic = true;
      JordanType jt = richardson_jordan_type(Family::B, flag);
      std::vector<int> expect;
      for (int i = 0; i < 2 * n - 2 * k + 1; ++i) expect.push_back(3);
      for (int i = 0; i < 3 * k - 2 * n - 2; ++i) expect.push_back(2);
      expect.push_back(1);
      expect.push_back(1);
      std::sort(expect.rbegin(), expect.rend());
      ++cases;
      if (jt.parts != expect) fail("B(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    for (int k = 1; k <= n; k += 2) {
      if (3 * k > 2 * n) continue;  // C small range: k odd, k <= 2n/3
      FlagType flag;
      flag.blocks = {k, 2 * n - 2 * k, k};
      flag.isotropic = true;
      JordanType jt = richardson_jordan_type(Family::C, flag);
      std::vector<int> expect;
      for (int i = 0; i < k - 1; ++i) expect.push_back(3);
      expect.push_back(2);
      expect.push_back(2);
      for (int i = 0; i < 2 * n - 3 * k - 1; ++i) expect.push_back(1);
      std::sort(expect.rbegin(), expect.rend());
      ++cases;
      if (jt.parts != expect) fail("C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }

  // Codimension-2 neighbors at the boundary parameters.
  for (int n = 2; n <= max_n; ++n) {
    if ((2 * n + 2) % 3 == 0) {
      int k = (2 * n + 2) / 3;
      if (k % 2 == 0 && k <= n && 3 * k > 2 * n + 1) {
        JordanType lam;
        lam.family = Family::B;
        lam.m = 2 * n + 1;
        for (int i = 0; i < k - 1; ++i) lam.parts.push_back(3);
        lam.parts.push_back(1);
        lam.parts.push_back(1);
        auto mu = codim2_neighbor(lam);
        std::vector<int> expect;
        for (int i = 0; i < k - 2; ++i) expect.push_back(3);
        expect.push_back(2);
        expect.push_back(2);
        expect.push_back(1);
        ++cases;
        if (!mu || mu->parts != expect) fail("B codim2 n=" + std::to_string(n));
      }
    }
    if ((2 * n + 1) % 3 == 0) {
      int k = (2 * n + 1) / 3;
      if (k % 2 == 1 && k <= n - 2 && 3 * k > 2 * n) {
        JordanType lam;
        lam.family = Family::D;
        lam.m = 2 * n;
        for (int i = 0; i < k - 1; ++i) lam.parts.push_back(3);
        lam.parts.push_back(1);
        lam.parts.push_back(1);
        auto mu = codim2_neighbor(lam);
        std::vector<int> expect;
        for (int i = 0; i < k - 2; ++i) expect.push_back(3);
        expect.push_back(2);
        expect.push_back(2);
        expect.push_back(1);
        ++cases;
        if (!mu || mu->parts != expect) fail("D codim2 n=" + std::to_string(n));
      }
    }
    if ((2 * n - 1) % 3 == 0) {
      int k = (2 * n - 1) / 3;
      if (k % 2 == 1 && k <= n && 3 * k <= 2 * n) {
        JordanType lam;
        lam.family = Family::C;
        lam.m = 2 * n;
        for (int i = 0; i < k - 1; ++i) lam.parts.push_back(3);
        lam.parts.push_back(2);
        lam.parts.push_back(2);
        auto mu = codim2_neighbor(lam);
        std::vector<int> expect;
        for (int i = 0; i < k - 1; ++i) expect.push_back(3);
        expect.push_back(2);
        expect.push_back(1);
        expect.push_back(1);
        ++cases;
        if (!mu || mu->parts != expect) fail("C codim2 n=" + std::to_string(n));
      }
    }
  }
  return {"collapse-vectors", pass,
          std::to_string(cases) + " closed-form cases" + (pass ? "" : ": first failure " + details)};
}

CheckResult check_borel_counts() {
  struct Case {
    Family f;
    int rank;
    long long order;
  };
  const Case cases[] = {{Family::A, 2, 6},
                        {Family::B, 2, 8},
                        {Family::G, 2, 12},
                        {Family::A, 3, 24},
                        {Family::B, 3, 48}};
  bool pass = true;
  std::string details;
  for (const auto& c : cases) {
    RootSystem sys = RootSystem::build(c.f, c.rank);
    long long w = sys.weyl_group_order();
    Parabolic borel = standard_parabolic(sys, {});
    long long s = (long long)enumerate_S(borel).size();
    if (!details.empty()) details += " ";
    details += sys.name() + ":" + std::to_string(s);
    if (w != c.order || s != w) pass = false;
  }
  return {"borel-counts", pass, details};
}

std::optional<bool> curated_birational(Family family, int rank, const std::vector<int>& marked) {
  if (family == Family::A) return true;  // type A Springer maps are resolutions
  std::vector<int> m = marked;
  std::sort(m.begin(), m.end());
  if (family == Family::D && rank == 4 && m == std::vector<int>{3, 4}) return false;
  if (family == Family::B && rank == 4 && m == std::vector<int>{4}) return false;
  if (family == Family::B && rank == 2 && m == std::vector<int>{2}) return false;
  if (family == Family::C && rank == 3 && m == std::vector<int>{1}) return false;
  return std::nullopt;
}

std::vector<std::pair<Family, int>> families_up_to(int max_rank) {
  std::vector<std::pair<Family, int>> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (valid_family_rank(f, r)) out.emplace_back(f, r);
  return out;
}

std::vector<std::vector<int>> all_markings(int rank) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << rank); ++mask) {
    std::vector<int> m;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) m.push_back(i + 1);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace paracone
