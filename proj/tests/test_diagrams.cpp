#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracone/diagrams.hpp"

using namespace paracone;

namespace {

MarkedDiagram md(Family f, int rank, std::set<int> marked) {
  return MarkedDiagram{f, rank, std::move(marked)};
}

}  // namespace

TEST_CASE("single marked subdiagram: D4 marked {3,4} at v=3 is A3 end-marked") {
  MarkedDiagram sub = single_marked_subdiagram(md(Family::D, 4, {3, 4}), 3);
  CHECK(sub.family == Family::A);
  CHECK(sub.rank == 3);
  CHECK(sub.marked == std::set<int>{1});
}

TEST_CASE("single marked subdiagram: B4 marked {4} at v=4 is all of B4") {
  MarkedDiagram sub = single_marked_subdiagram(md(Family::B, 4, {4}), 4);
  CHECK(sub.family == Family::B);
  CHECK(sub.rank == 4);
  CHECK(sub.marked == std::set<int>{4});
}

TEST_CASE("single marked subdiagram: A5 marked {2,4} at v=2 is interior A3") {
  MarkedDiagram sub = single_marked_subdiagram(md(Family::A, 5, {2, 4}), 2);
  CHECK(sub.family == Family::A);
  CHECK(sub.rank == 3);
  CHECK(sub.marked == std::set<int>{2});
}

TEST_CASE("single marked subdiagram: unmarked vertex is rejected") {
  CHECK_THROWS_AS(single_marked_subdiagram(md(Family::D, 4, {3, 4}), 1), ConfigError);
}

TEST_CASE("single marked subdiagram inside C and F ambients") {
  // C4 marked {2}: component of 2 in {1,3,4,2} is the whole C4 chain.
  MarkedDiagram c = single_marked_subdiagram(md(Family::C, 4, {2}), 2);
  CHECK(c.family == Family::C);
  CHECK(c.rank == 4);
  CHECK(c.marked == std::set<int>{2});
  // F4 marked {1}: B-type tail is read off the lengths.
  MarkedDiagram f = single_marked_subdiagram(md(Family::F, 4, {1}), 1);
  CHECK(f.family == Family::F);
  CHECK(f.marked == std::set<int>{1});
  // inside F4, the short end {3,4} with 4 marked forms a C-type pair
  // component of 4 within {2,3}+{4} is {2,3,4}: a C3 chain.
  MarkedDiagram g = single_marked_subdiagram(md(Family::F, 4, {1, 4}), 4);
  CHECK(g.family == Family::C);
  CHECK(g.rank == 3);
}

TEST_CASE("classify: A-type first kind with dual, middle divisorial") {
  SingleMarkedClass c1 = classify(md(Family::A, 3, {1}));
  CHECK(c1.kind == TwistKind::FirstKind);
  CHECK(c1.label.str() == "A(4,1)");
  REQUIRE(c1.dual.has_value());
  CHECK(c1.dual->marked == std::set<int>{3});
  CHECK(classify(*c1.dual).dual->marked == std::set<int>{1});

  SingleMarkedClass c2 = classify(md(Family::A, 4, {2}));
  CHECK(c2.kind == TwistKind::FirstKind);
  CHECK(c2.label.str() == "A(5,2)");
  CHECK(c2.dual->marked == std::set<int>{3});

  CHECK(classify(md(Family::A, 3, {2})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::A, 1, {1})).kind == TwistKind::SecondDivisorial);
}

TEST_CASE("classify: B small range") {
  CHECK(classify(md(Family::B, 4, {4})).kind == TwistKind::SecondSmall);
  CHECK(classify(md(Family::B, 4, {2})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::B, 4, {3})).kind == TwistKind::SecondDivisorial);
  SingleMarkedClass b44 = classify(md(Family::B, 4, {4}));
  CHECK(b44.label.str() == "B(4,4)");
  REQUIRE(b44.label.canonical_alias.has_value());
  CHECK(*b44.label.canonical_alias == "Dfork(5)");
  // odd k never small for B
  CHECK(classify(md(Family::B, 5, {5})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::B, 6, {6})).kind == TwistKind::SecondSmall);
}

TEST_CASE("classify: C small range") {
  CHECK(classify(md(Family::C, 3, {1})).kind == TwistKind::SecondSmall);
  CHECK(classify(md(Family::C, 3, {3})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::C, 4, {1})).kind == TwistKind::SecondSmall);
  CHECK(classify(md(Family::C, 4, {3})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::C, 6, {3})).kind == TwistKind::SecondSmall);
}

TEST_CASE("classify: D tips and chain") {
  // odd rank >= 5: fork tips are dual first-kind
  SingleMarkedClass d5 = classify(md(Family::D, 5, {4}));
  CHECK(d5.kind == TwistKind::FirstKind);
  CHECK(d5.label.str() == "Dfork(5)");
  CHECK(d5.dual->marked == std::set<int>{5});
  // even rank: tips are divisorial
  CHECK(classify(md(Family::D, 4, {3})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::D, 6, {6})).kind == TwistKind::SecondDivisorial);
  // chain positions: odd k > 2n/3, k <= n-2 is small
  CHECK(classify(md(Family::D, 7, {5})).kind == TwistKind::SecondSmall);
  CHECK(classify(md(Family::D, 7, {4})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::D, 7, {3})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::D, 4, {1})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::D, 4, {2})).kind == TwistKind::SecondDivisorial);
}

TEST_CASE("classify: E6 vertices split into E6_I, E6_II and divisorial") {
  for (int v : {1, 6}) {
    SingleMarkedClass c = classify(md(Family::E, 6, {v}));
    CHECK(c.kind == TwistKind::FirstKind);
    CHECK(c.label.str() == "E6_I");
    CHECK(c.dual->marked == std::set<int>{7 - v});
  }
  for (int v : {3, 5}) {
    SingleMarkedClass c = classify(md(Family::E, 6, {v}));
    CHECK(c.kind == TwistKind::FirstKind);
    CHECK(c.label.str() == "E6_II");
    CHECK(c.dual->marked == std::set<int>{8 - v});
  }
  CHECK(classify(md(Family::E, 6, {2})).kind == TwistKind::SecondDivisorial);
  CHECK(classify(md(Family::E, 6, {4})).kind == TwistKind::SecondDivisorial);
}

TEST_CASE("classify: E7, E8, F4, G2 single markings are divisorial") {
  for (int v = 1; v <= 7; ++v)
    CHECK(classify(md(Family::E, 7, {v})).kind == TwistKind::SecondDivisorial);
  for (int v = 1; v <= 8; ++v)
    CHECK(classify(md(Family::E, 8, {v})).kind == TwistKind::SecondDivisorial);
  for (int v = 1; v <= 4; ++v)
    CHECK(classify(md(Family::F, 4, {v})).kind == TwistKind::SecondDivisorial);
  for (int v = 1; v <= 2; ++v)
    CHECK(classify(md(Family::G, 2, {v})).kind == TwistKind::SecondDivisorial);
}

TEST_CASE("flop labels follow the class") {
  SingleMarkedClass first = classify(md(Family::A, 4, {1}));
  CHECK(flop_label(first).str() == "A(5,1)");
  SingleMarkedClass small = classify(md(Family::C, 3, {1}));
  CHECK(flop_label(small).str() == "C(3,1)");
  SingleMarkedClass div = classify(md(Family::G, 2, {1}));
  CHECK(flop_label(div).str() == "none");
}

TEST_CASE("dual of dual is the identity on first-kind classes, rank <= 8") {
  for (auto [f, maxr] : std::vector<std::pair<Family, int>>{
           {Family::A, 8}, {Family::D, 8}, {Family::E, 6}}) {
    for (int r = 1; r <= maxr; ++r) {
      if (!valid_family_rank(f, r)) continue;
      for (int k = 1; k <= r; ++k) {
        SingleMarkedClass c = classify(md(f, r, {k}));
        if (c.kind != TwistKind::FirstKind) continue;
        REQUIRE(c.dual.has_value());
        SingleMarkedClass cd = classify(*c.dual);
        CHECK(cd.kind == TwistKind::FirstKind);
        CHECK(cd.dual->marked == std::set<int>{k});
        CHECK(cd.label.str() == c.label.str());
      }
    }
  }
}

TEST_CASE("A first kind iff 2k != m+1, checked exhaustively to rank 11") {
  for (int m = 1; m <= 11; ++m)
    for (int k = 1; k <= m; ++k) {
      TwistKind kind = classify(md(Family::A, m, {k})).kind;
      if (2 * k == m + 1)
        CHECK(kind == TwistKind::SecondDivisorial);
      else
        CHECK(kind == TwistKind::FirstKind);
    }
}

TEST_CASE("classify is total on single markings of every family, rank <= 12") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= 12; ++r) {
      if (!valid_family_rank(f, r)) continue;
      for (int k = 1; k <= r; ++k) CHECK_NOTHROW(classify(md(f, r, {k})));
    }
}

TEST_CASE("component-level cross-oracle: subdiagram class vs -w0 on partial markings") {
  // For every marking and every marked vertex, the extracted single marked
  // subdiagram is first kind exactly when -w0 of the component moves the
  // vertex. Exercises extraction inside larger ambients (D and E pieces of
  // E6, B/C pieces of F4, ...).
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 5},
                                                         {Family::B, 5},
                                                         {Family::C, 5},
                                                         {Family::D, 6},
                                                         {Family::E, 6},
                                                         {Family::E, 7},
                                                         {Family::F, 4},
                                                         {Family::G, 2}}) {
    RootSystem sys = RootSystem::build(f, r);
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      std::set<int> marked;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) marked.insert(i + 1);
      MarkedDiagram d{f, r, marked};
      for (int v : marked) {
        std::set<int> allowed = d.unmarked();
        allowed.insert(v);
        std::vector<int> comp = sys.component_of(v, allowed);
        auto perm = sys.minus_w0_vertex_permutation(comp);
        TwistKind kind = classify(single_marked_subdiagram(d, v)).kind;
        CHECK((kind == TwistKind::FirstKind) == (perm[v] != v));
      }
    }
  }
}

TEST_CASE("first kind iff -w0 of the component moves the marked vertex, rank <= 8") {
  for (Family fam : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
  for (int r = 1; r <= 8; ++r) {
    if (!valid_family_rank(fam, r)) continue;
    Family f = fam;
    RootSystem sys = RootSystem::build(f, r);
    for (int v = 1; v <= r; ++v) {
      // Single marking {v} on the full diagram: the component of v in
      // unmarked+{v} is everything, so classify sees the whole diagram.
      MarkedDiagram full = md(f, r, {v});
      MarkedDiagram sub = single_marked_subdiagram(full, v);
      TwistKind kind = classify(sub).kind;
      std::vector<int> comp;
      for (int i = 1; i <= r; ++i) comp.push_back(i);
      auto perm = sys.minus_w0_vertex_permutation(comp);
      bool moved = perm[v] != v;
      CHECK((kind == TwistKind::FirstKind) == moved);
    }
  }
}
