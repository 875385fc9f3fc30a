#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracone/normalizer.hpp"

using namespace paracone;

TEST_CASE("quotient of the D4 {3,4} hexagon: two cosets, nontrivial one acts by -1") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  auto reps = quotient_reps(cc);
  REQUIRE(reps.size() == 2);
  int nontrivial = reps[0].is_identity() ? 1 : 0;
  CHECK(reps[1 - nontrivial].is_identity());
  IntMat minus = {{-1, 0}, {0, -1}};
  CHECK(reps[nontrivial].action_on_m == minus);
}

TEST_CASE("A2 Borel: the full Weyl group acts, six cosets") {
  RootSystem sys = RootSystem::build(Family::A, 2);
  ChamberComplex cc = ChamberComplex::build(sys, {});
  CHECK(quotient_reps(cc).size() == 6);
  CountReport r = verify_count(cc);
  CHECK(r.s == 6);
  CHECK(r.n == 1);
  CHECK(r.q == 6);
  CHECK(r.ok);
}

TEST_CASE("A3 Levi {2}: two cosets") {
  RootSystem sys = RootSystem::build(Family::A, 3);
  ChamberComplex cc = ChamberComplex::build(sys, {2});
  CHECK(quotient_reps(cc).size() == 2);
  CountReport r = verify_count(cc);
  CHECK(r.s == 6);
  CHECK(r.n == 3);
  CHECK(r.q == 2);
  CHECK(r.ok);
}

TEST_CASE("verify_count on the hexagon and the small B4 instance") {
  RootSystem d4 = RootSystem::build(Family::D, 4);
  CountReport r = verify_count(ChamberComplex::build(d4, {1, 2}));
  CHECK(r.s == 6);
  CHECK(r.n == 3);
  CHECK(r.q == 2);
  CHECK(r.ok);

  RootSystem b4 = RootSystem::build(Family::B, 4);
  CountReport rb = verify_count(ChamberComplex::build(b4, {1, 2, 3}));
  CHECK(rb.s == 2);
  CHECK(rb.n == 1);
  CHECK(rb.q == 2);
  CHECK(rb.ok);
}

TEST_CASE("exceptional instances: E6 {1,2} and E7 {7} counting") {
  RootSystem e6 = RootSystem::build(Family::E, 6);
  CountReport r6 = verify_count(ChamberComplex::build(e6, {3, 4, 5, 6}));
  CHECK(r6.s == 8);
  CHECK(r6.n == 4);
  CHECK(r6.q == 2);
  CHECK(r6.ok);

  RootSystem e7 = RootSystem::build(Family::E, 7);
  CountReport r7 = verify_count(ChamberComplex::build(e7, {1, 2, 3, 4, 5, 6}));
  CHECK(r7.s == 2);
  CHECK(r7.n == 1);
  CHECK(r7.q == 2);
  CHECK(r7.ok);
}

TEST_CASE("coset actions form a group on the action matrices") {
  for (auto [f, r, levi] : std::vector<std::tuple<Family, int, std::vector<int>>>{
           {Family::D, 4, std::vector<int>{1, 2}},
           {Family::A, 3, std::vector<int>{2}},
           {Family::B, 3, std::vector<int>{}}}) {
    RootSystem sys = RootSystem::build(f, r);
    ChamberComplex cc = ChamberComplex::build(sys, levi);
    auto reps = quotient_reps(cc);
    std::set<IntMat> actions;
    for (const auto& rep : reps) actions.insert(rep.action_on_m);
    for (const auto& a : reps)
      for (const auto& b : reps)
        CHECK(actions.count(mat_mul(a.action_on_m, b.action_on_m)));
  }
}

TEST_CASE("the quotient action permutes the chamber set") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  for (const auto& rep : quotient_reps(cc)) {
    std::set<int> image;
    for (int id = 0; id < cc.size(); ++id) image.insert(act_on_chamber(cc, rep, id));
    CHECK((int)image.size() == cc.size());
  }
}

TEST_CASE("fundamental domain: the hexagon fails (iii) for the -1 coset") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  DomainReport report = fundamental_domain_check(cc, cc.standard_id(), false);
  CHECK_FALSE(report.birational);
  CHECK(report.cond_ii);
  REQUIRE(report.cond_iii.size() == 1);
  CHECK_FALSE(report.cond_iii[0].second);
  CHECK_FALSE(report.all_nontrivial_disjoint);
}

TEST_CASE("fundamental domain: A3 {1,3} and the A2 Borel pass (ii) and (iii)") {
  RootSystem a3 = RootSystem::build(Family::A, 3);
  ChamberComplex cc = ChamberComplex::build(a3, {2});
  DomainReport report = fundamental_domain_check(cc, cc.standard_id(), true);
  CHECK(report.cond_ii);
  CHECK(report.all_nontrivial_disjoint);

  RootSystem a2 = RootSystem::build(Family::A, 2);
  ChamberComplex borel = ChamberComplex::build(a2, {});
  DomainReport rb = fundamental_domain_check(borel, borel.standard_id(), true);
  CHECK(rb.s1_ids.size() == 1);  // movable cone is one Weyl chamber
  CHECK(rb.cond_ii);
  CHECK(rb.all_nontrivial_disjoint);
}
