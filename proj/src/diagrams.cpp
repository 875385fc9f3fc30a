#include "paracone/diagrams.hpp"

#include <algorithm>
#include <deque>

namespace paracone {

std::set<int> MarkedDiagram::unmarked() const {
  std::set<int> out;
  for (int i = 1; i <= rank; ++i)
    if (!marked.count(i)) out.insert(i);
  return out;
}

std::string MarkedDiagram::str() const {
  std::string s(1, family_char(family));
  s += std::to_string(rank) + "{";
  bool first = true;
  for (int v : marked) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::string twist_kind_str(TwistKind k) {
  switch (k) {
    case TwistKind::FirstKind: return "first";
    case TwistKind::SecondSmall: return "2-s";
    case TwistKind::SecondDivisorial: return "2-d";
  }
  return "?";
}

std::string FlopLabel::str() const {
  switch (type) {
    case Type::A: return "A(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Type::Dfork: return "Dfork(" + std::to_string(n) + ")";
    case Type::E6_I: return "E6_I";
    case Type::E6_II: return "E6_II";
    case Type::B: return "B(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Type::C: return "C(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Type::Dchain: return "D(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Type::DivisorialNoFlop: return "none";
  }
  return "?";
}

namespace {

struct InducedGraph {
  std::vector<int> verts;                  // ambient 1-based
  std::map<int, std::vector<int>> adj;     // neighbors
  std::map<std::pair<int, int>, int> bond; // multiplicity c_ij * c_ji
  std::map<int, int> len;                  // ambient squared length
};

InducedGraph induced(Family fam, int rank, const std::vector<int>& comp) {
  IntMat c = cartan_matrix(fam, rank);
  auto lens = length_table(fam, rank);
  InducedGraph g;
  g.verts = comp;
  for (int v : comp) g.len[v] = lens[v - 1];
  for (int a : comp)
    for (int b : comp) {
      if (a >= b) continue;
      int m = c[a - 1][b - 1] * c[b - 1][a - 1];
      if (m > 0) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
        g.bond[{a, b}] = g.bond[{b, a}] = m;
      }
    }
  return g;
}

int degree(const InducedGraph& g, int v) {
  auto it = g.adj.find(v);
  return it == g.adj.end() ? 0 : (int)it->second.size();
}

// Path order of a chain graph starting from a chosen endpoint.
std::vector<int> walk_chain(const InducedGraph& g, int start) {
  std::vector<int> path{start};
  int prev = -1, cur = start;
  while ((int)path.size() < (int)g.verts.size()) {
    int nxt = -1;
    for (int u : g.adj.at(cur))
      if (u != prev) nxt = u;
    internal_check(nxt > 0, "chain walk broke");
    path.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return path;
}

// Branches of a fork graph: paths from the center outward, inner vertex
// first, sorted by length.
std::vector<std::vector<int>> fork_branches(const InducedGraph& g, int center) {
  std::vector<std::vector<int>> branches;
  for (int start : g.adj.at(center)) {
    std::vector<int> br{start};
    int prev = center, cur = start;
    for (;;) {
      int nxt = -1;
      for (int u : g.adj.at(cur))
        if (u != prev) nxt = u;
      if (nxt < 0) break;
      br.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    branches.push_back(br);
  }
  std::sort(branches.begin(), branches.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return branches;
}

MarkedDiagram make_single(Family fam, int rank, int pos) {
  return MarkedDiagram{fam, rank, {pos}};
}

}  // namespace

MarkedDiagram single_marked_subdiagram(const MarkedDiagram& d, int v) {
  require(d.marked.count(v) > 0, "vertex " + std::to_string(v) + " is not marked");
  // Component of v inside unmarked + {v}.
  std::set<int> allowed = d.unmarked();
  allowed.insert(v);
  IntMat c = cartan_matrix(d.family, d.rank);
  std::set<int> seen{v};
  std::deque<int> queue{v};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : allowed)
      if (!seen.count(y) && x != y && c[x - 1][y - 1] != 0) {
        seen.insert(y);
        queue.push_back(y);
      }
  }
  std::vector<int> comp(seen.begin(), seen.end());
  int m = (int)comp.size();
  InducedGraph g = induced(d.family, d.rank, comp);

  if (m == 1) return make_single(Family::A, 1, 1);

  int max_bond = 1;
  for (const auto& [e, mult] : g.bond) max_bond = std::max(max_bond, mult);

  if (max_bond == 3) {
    internal_check(m == 2, "triple bond outside G2");
    return make_single(Family::G, 2, g.len[v] < g.len[comp[0] == v ? comp[1] : comp[0]] ? 1 : 2);
  }

  if (max_bond == 2) {
    // B/C/F chain. Orient it and read the double-bond position.
    std::vector<int> ends;
    for (int u : comp)
      if (degree(g, u) == 1) ends.push_back(u);
    internal_check(ends.size() == 2, "multiple-bond diagram is not a chain");
    std::vector<int> path = walk_chain(g, ends[0]);
    int dpos = -1;
    for (int i = 0; i + 1 < m; ++i)
      if (g.bond.at({path[i], path[i + 1]}) == 2) dpos = i;
    internal_check(dpos >= 0, "lost the double bond");
    if (m == 4 && dpos == 1) {
      // F4: long pair comes first.
      if (g.len[path[0]] < g.len[path[3]]) std::reverse(path.begin(), path.end());
      for (int i = 0; i < 4; ++i)
        if (path[i] == v) return make_single(Family::F, 4, i + 1);
      internal_check(false, "marked vertex fell off the F4 chain");
    }
    // Double bond sits at an end; orient it to the right.
    if (m == 2) {
      if (g.len[path[0]] < g.len[path[1]]) std::reverse(path.begin(), path.end());
    } else if (dpos == 0) {
      std::reverse(path.begin(), path.end());
    }
    Family fam = g.len[path[m - 1]] < g.len[path[m - 2]] ? Family::B : Family::C;
    for (int i = 0; i < m; ++i)
      if (path[i] == v) return make_single(fam, m, i + 1);
    internal_check(false, "marked vertex fell off the chain");
  }

  // Simply laced. Either a chain (A) or a fork (D/E).
  int center = 0, maxdeg = 0;
  for (int u : comp) {
    int deg = degree(g, u);
    if (deg > maxdeg) {
      maxdeg = deg;
      center = u;
    }
    internal_check(deg <= 3, "vertex degree exceeds 3");
  }
  if (maxdeg <= 2) {
    std::vector<int> ends;
    for (int u : comp)
      if (degree(g, u) == 1) ends.push_back(u);
    internal_check(ends.size() == 2, "simply laced chain expected");
    std::vector<int> path = walk_chain(g, ends[0]);
    int pos = -1;
    for (int i = 0; i < m; ++i)
      if (path[i] == v) pos = i + 1;
    return make_single(Family::A, m, std::min(pos, m + 1 - pos));
  }

  auto branches = fork_branches(g, center);
  internal_check(branches.size() == 3, "fork with wrong branch count");
  size_t a = branches[0].size(), b = branches[1].size(), cl = branches[2].size();
  internal_check(a == 1, "branch profile outside finite types");

  if (b == 1) {
    // D_m with m = cl + 3. Long-branch positions run 1..cl from the far
    // end, center is m-2, the two short branches are the fork tips. When
    // the marked vertex sits on a shortest branch that could serve as the
    // chain (D4), prefer the chain reading: it gives the smaller index.
    int rank_d = (int)cl + 3;
    if (v == center) return make_single(Family::D, rank_d, rank_d - 2);
    for (const auto& br : branches) {
      for (size_t i = 0; i < br.size(); ++i) {
        if (br[i] != v) continue;
        if (br.size() == cl) return make_single(Family::D, rank_d, (int)(cl - i));
        return make_single(Family::D, rank_d, rank_d - 1);
      }
    }
    internal_check(false, "marked vertex not found on fork");
  }

  internal_check(b == 2, "branch profile outside finite types");
  if (cl == 2) {
    // E6: center -> 4, short branch -> 2, the marked long branch maps to
    // (3,1) so the marked vertex takes the smaller of the symmetric slots.
    if (v == center) return make_single(Family::E, 6, 4);
    if (branches[0][0] == v) return make_single(Family::E, 6, 2);
    for (size_t bi = 1; bi < 3; ++bi) {
      if (branches[bi][0] == v) return make_single(Family::E, 6, 3);
      if (branches[bi][1] == v) return make_single(Family::E, 6, 1);
    }
    internal_check(false, "marked vertex not found on E6 fork");
  }
  internal_check(cl == 3 || cl == 4, "branch profile outside finite types");
  int rank_e = (int)cl + 5;  // E7 or E8
  if (v == center) return make_single(Family::E, rank_e, 4);
  if (branches[0][0] == v) return make_single(Family::E, rank_e, 2);
  if (branches[1][0] == v) return make_single(Family::E, rank_e, 3);
  if (branches[1][1] == v) return make_single(Family::E, rank_e, 1);
  for (size_t i = 0; i < cl; ++i)
    if (branches[2][i] == v) return make_single(Family::E, rank_e, (int)(5 + i));
  internal_check(false, "marked vertex not found on E fork");
  return {};
}

SingleMarkedClass classify(const MarkedDiagram& d) {
  require(d.marked.size() == 1, "classify needs exactly one marked vertex");
  int k = *d.marked.begin();
  require(k >= 1 && k <= d.rank, "marked vertex out of range");
  int n = d.rank;
  SingleMarkedClass cls;
  auto first_kind = [&](FlopLabel lab, MarkedDiagram dual) {
    cls.kind = TwistKind::FirstKind;
    cls.label = lab;
    cls.dual = dual;
  };
  auto small_kind = [&](FlopLabel lab) {
    cls.kind = TwistKind::SecondSmall;
    cls.label = lab;
  };
  cls.label = FlopLabel{};  // divisorial default

  switch (d.family) {
    case Family::A: {
      int verts = n;
      int total = verts + 1;  // A(total, k)
      if (2 * k != total) {
        first_kind(FlopLabel{FlopLabel::Type::A, total, std::min(k, total - k), {}},
                   MarkedDiagram{Family::A, verts, {total - k}});
      }
      break;
    }
    case Family::B: {
      require(n >= 2, "B diagram needs rank >= 2");
      if (k % 2 == 0 && 3 * k > 2 * n + 1) {
        FlopLabel lab{FlopLabel::Type::B, n, k, {}};
        if (k == n && n % 2 == 0)
          lab.canonical_alias = "Dfork(" + std::to_string(n + 1) + ")";
        small_kind(lab);
      }
      break;
    }
    case Family::C: {
      require(n >= 2, "C diagram needs rank >= 2");
      if (k % 2 == 1 && 3 * k <= 2 * n)
        small_kind(FlopLabel{FlopLabel::Type::C, n, k, {}});
      break;
    }
    case Family::D: {
      require(n >= 4, "D diagram needs rank >= 4");
      if (k >= n - 1) {
        if (n % 2 == 1)
          first_kind(FlopLabel{FlopLabel::Type::Dfork, n, 0, {}},
                     MarkedDiagram{Family::D, n, {k == n ? n - 1 : n}});
      } else if (k % 2 == 1 && 3 * k > 2 * n) {
        small_kind(FlopLabel{FlopLabel::Type::Dchain, n, k, {}});
      }
      break;
    }
    case Family::E: {
      if (n == 6) {
        if (k == 1 || k == 6)
          first_kind(FlopLabel{FlopLabel::Type::E6_I, 6, 0, {}},
                     MarkedDiagram{Family::E, 6, {7 - k}});
        else if (k == 3 || k == 5)
          first_kind(FlopLabel{FlopLabel::Type::E6_II, 6, 0, {}},
                     MarkedDiagram{Family::E, 6, {8 - k}});
      }
      break;
    }
    case Family::F:
    case Family::G:
      break;
  }
  return cls;
}

FlopLabel flop_label(const SingleMarkedClass& cls) {
  if (cls.kind == TwistKind::SecondDivisorial) return FlopLabel{};
  return cls.label;
}

}  // namespace paracone
