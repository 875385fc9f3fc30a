#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle_helpers.hpp"
#include "paracone/cones.hpp"
#include "paracone/flopwalk.hpp"

using namespace paracone;

TEST_CASE("nef cone of a standard parabolic is the dominant orthant of M(L0)") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  Parabolic p0 = standard_parabolic(sys, {1, 2});
  PolyhedralCone cone = nef_cone(p0);
  REQUIRE(cone.normals.size() == 2);
  CHECK(cone.facet_vertices == std::vector<int>{3, 4});
  CHECK(cone.normals[0] == IntVec{1, 0});
  CHECK(cone.normals[1] == IntVec{0, 1});
  CHECK(cone.rays[0] == IntVec{1, 0});
  CHECK(cone.rays[1] == IntVec{0, 1});
}

TEST_CASE("nef cone of the opposite is the negated cone") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  Parabolic p0 = standard_parabolic(sys, {1, 2});
  PolyhedralCone cone = nef_cone(opposite(p0));
  std::set<IntVec> normals(cone.normals.begin(), cone.normals.end());
  CHECK(normals == std::set<IntVec>{{-1, 0}, {0, -1}});
}

TEST_CASE("hexagon: D4 {3,4} complex is a 6-cycle of simplicial cones") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  CHECK(cc.size() == 6);
  CHECK(cc.walls().size() == 6);
  for (const auto& w : cc.walls()) CHECK(w.kind == TwistKind::FirstKind);
  // every chamber has exactly two walls and two distinct neighbors
  for (int id = 0; id < cc.size(); ++id) {
    const auto& marked = cc.chamber(id).standardization.diagram.marked;
    REQUIRE(marked.size() == 2);
    std::set<int> nb;
    for (int v : marked) nb.insert(cc.neighbor(id, v));
    CHECK(nb.size() == 2);
    CHECK(!nb.count(id));
  }
  // the twist neighbor relation is a single 6-cycle
  std::set<int> seen{0};
  int prev = 0;
  int cur = *[&] {
    std::set<int> nb;
    for (int v : cc.chamber(0).standardization.diagram.marked) nb.insert(cc.neighbor(0, v));
    return nb;
  }().begin();
  int steps = 1;
  while (cur != 0) {
    seen.insert(cur);
    int nxt = -1;
    for (int v : cc.chamber(cur).standardization.diagram.marked) {
      int cand = cc.neighbor(cur, v);
      if (cand != prev) nxt = cand;
    }
    prev = cur;
    cur = nxt;
    ++steps;
    REQUIRE(steps <= 6);
  }
  CHECK(steps == 6);
  CHECK(seen.size() == 6);  // all six chambers on one cycle

  // antipodal pairing: the opposite chamber carries the negated cone and in
  // the 6-cycle it sits exactly three steps away
  for (int id = 0; id < cc.size(); ++id) {
    const Chamber& ch = cc.chamber(id);
    std::set<IntVec> neg;
    for (const auto& n : ch.cone.normals) {
      IntVec v = n;
      for (long long& x : v) x = -x;
      neg.insert(v);
    }
    const Chamber& op = cc.chamber(ch.opposite);
    CHECK(std::set<IntVec>(op.cone.normals.begin(), op.cone.normals.end()) == neg);
  }
}

TEST_CASE("B4 {4}: two chambers split a line, single 2-s wall with alias") {
  RootSystem sys = RootSystem::build(Family::B, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2, 3});
  CHECK(cc.size() == 2);
  REQUIRE(cc.walls().size() == 1);
  const Wall& w = cc.walls()[0];
  CHECK(w.kind == TwistKind::SecondSmall);
  CHECK(w.flop.str() == "B(4,4)");
  REQUIRE(w.flop.canonical_alias.has_value());
  CHECK(*w.flop.canonical_alias == "Dfork(5)");
}

TEST_CASE("B4 {2}: single divisorial wall") {
  RootSystem sys = RootSystem::build(Family::B, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 3, 4});
  CHECK(cc.size() == 2);
  REQUIRE(cc.walls().size() == 1);
  CHECK(cc.walls()[0].kind == TwistKind::SecondDivisorial);
  CHECK(cc.walls()[0].flop.str() == "none");
}

TEST_CASE("A2 Borel: six Weyl chambers") {
  RootSystem sys = RootSystem::build(Family::A, 2);
  ChamberComplex cc = ChamberComplex::build(sys, {});
  CHECK(cc.size() == 6);
  CHECK(cc.walls().size() == 6);
}

TEST_CASE("locate: dominant and antidominant characters, wall tie-breaks") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  CharacterVector dom = character_on_marked(sys, cc.marked(), {Rat(2), Rat(3)});
  CHECK(cc.locate(dom) == cc.standard_id());
  CharacterVector antidom = character_on_marked(sys, cc.marked(), {Rat(-2), Rat(-3)});
  CHECK(cc.locate(antidom) == cc.chamber(cc.standard_id()).opposite);
  // a wall character lies in two closed chambers; locate picks the smaller id
  CharacterVector wall = character_on_marked(sys, cc.marked(), {Rat(0), Rat(1)});
  auto closed = cc.all_closed_containing(wall);
  CHECK(closed.size() == 2);
  CHECK(cc.locate(wall) == closed.front());
  CHECK(cc.all_interior_containing(wall).empty());
}

TEST_CASE("characters outside M(L0) are rejected") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  CharacterVector bad;
  bad.fw = {Rat(1), Rat(0), Rat(1), Rat(1)};
  CHECK_THROWS_AS(cc.locate(bad), ConfigError);
}

TEST_CASE("cover: random characters always land in exactly one open chamber") {
  std::mt19937_64 rng(99);
  for (auto levi : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}) {
    RootSystem sys = RootSystem::build(Family::B, 3);
    ChamberComplex cc = ChamberComplex::build(sys, levi);
    for (int i = 0; i < 400; ++i) {
      CharacterVector chi = random_character(cc, rng);
      auto closed = cc.all_closed_containing(chi);
      auto open = cc.all_interior_containing(chi);
      CHECK(!closed.empty());
      CHECK(open.size() <= 1);
      if (open.size() == 1) CHECK(cc.locate(chi) == open[0]);
    }
  }
}

TEST_CASE("movable union: hexagon is all first kind, B4 splits by wall kind") {
  RootSystem d4 = RootSystem::build(Family::D, 4);
  ChamberComplex hex = ChamberComplex::build(d4, {1, 2});
  MovableUnion all = movable_union(hex, MovableMode::FirstAndSmall, hex.standard_id());
  CHECK(all.ids.size() == 6);
  MovableUnion s1 = movable_union(hex, MovableMode::FirstKindOnly, hex.standard_id());
  CHECK(s1.ids.size() == 6);

  RootSystem b4 = RootSystem::build(Family::B, 4);
  ChamberComplex small = ChamberComplex::build(b4, {1, 2, 3});
  CHECK(movable_union(small, MovableMode::FirstAndSmall, small.standard_id()).ids.size() == 2);
  CHECK(movable_union(small, MovableMode::FirstKindOnly, small.standard_id()).ids.size() == 1);

  ChamberComplex div = ChamberComplex::build(b4, {1, 3, 4});
  CHECK(movable_union(div, MovableMode::FirstAndSmall, div.standard_id()).ids.size() == 1);
}

TEST_CASE("simpliciality: every nef cone has rho dual facet-ray pairs") {
  for (auto levi : std::vector<std::vector<int>>{{}, {1}, {2}, {3}}) {
    RootSystem sys = RootSystem::build(Family::C, 3);
    ChamberComplex cc = ChamberComplex::build(sys, levi);
    size_t rho = cc.marked().size();
    for (int id = 0; id < cc.size(); ++id) {
      const PolyhedralCone& cone = cc.chamber(id).cone;
      REQUIRE(cone.normals.size() == rho);
      REQUIRE(cone.rays.size() == rho);
      for (size_t i = 0; i < rho; ++i)
        for (size_t j = 0; j < rho; ++j) {
          long long d = dot(cone.normals[i], cone.rays[j]);
          if (i == j)
            CHECK(d > 0);
          else
            CHECK(d == 0);
        }
    }
  }
}

TEST_CASE("transport invariance: normals move with the Weyl action on the normalizer") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  // find an element of N_W(L0): the standardization of a chamber conjugate
  // to the standard one
  for (int id = 0; id < cc.size(); ++id) {
    const Chamber& ch = cc.chamber(id);
    if (ch.standardization.diagram.marked != std::set<int>{3, 4}) continue;
    const WeylElement& w = ch.standardization.to_standard;
    for (int src = 0; src < cc.size(); ++src) {
      Parabolic moved = apply_weyl(w, cc.chamber(src).parabolic);
      int dst = cc.chamber_of(moved);
      // transported normals equal the stored normal set of the image
      IntMat a = sys.weight_action(w);
      RatMat am(2, RatVec(2));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) am[i][j] = Rat(a[cc.marked()[i] - 1][cc.marked()[j] - 1]);
      auto inv = rat_inverse(am);
      REQUIRE(inv.has_value());
      std::set<IntVec> expect;
      for (const auto& n : cc.chamber(src).cone.normals) {
        RatVec moved_n(2, Rat(0));
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) moved_n[i] += (*inv)[j][i] * Rat(n[j]);
        expect.insert(primitive_of(moved_n));
      }
      std::set<IntVec> got(cc.chamber(dst).cone.normals.begin(),
                           cc.chamber(dst).cone.normals.end());
      CHECK(got == expect);
    }
  }
}
