#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracone/serialize.hpp"
#include "paracone/verification.hpp"

using namespace paracone;

TEST_CASE("enumerate json: hexagon counts as exact strings") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  Json j = enumerate_json(cc);
  CHECK(j["counts"]["S"] == "6");
  CHECK(j["counts"]["N"] == "3");
  CHECK(j["counts"]["q"] == "2");
  CHECK(j["instance"]["family"] == "D");
  CHECK(j["instance"]["marked"].size() == 2);
  CHECK(j["chambers"].size() == 6);
}

TEST_CASE("json documents round-trip byte-identically") {
  RootSystem sys = RootSystem::build(Family::B, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2, 3});
  for (const Json& doc : {enumerate_json(cc), chambers_json(cc)}) {
    std::string s = doc.dump(2);
    Json parsed = Json::parse(s);
    CHECK(parsed == doc);
    CHECK(parsed.dump(2) == s);
  }
  CharacterVector chi = character_on_marked(sys, cc.marked(), {Rat(-3, 2)});
  Json wj = walk_json(cc, walk(cc, cc.standard_id(), chi));
  CHECK(Json::parse(wj.dump()) == wj);
  CHECK(wj["steps"].size() == 1);
  CHECK(wj["steps"][0]["alias"] == "Dfork(5)");
}

TEST_CASE("no floating point numbers anywhere in the documents") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  std::function<void(const Json&)> scan = [&](const Json& j) {
    CHECK_FALSE(j.is_number_float());
    if (j.is_object() || j.is_array())
      for (const auto& child : j) scan(child);
  };
  scan(chambers_json(cc));
}

TEST_CASE("dot output for the hexagon has six nodes and six first-kind edges") {
  RootSystem sys = RootSystem::build(Family::D, 4);
  ChamberComplex cc = ChamberComplex::build(sys, {1, 2});
  std::string dot = chambers_dot(cc);
  size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = dot.find("[label", pos)) != std::string::npos) {
    ++nodes;
    pos += 6;
  }
  pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    pos += 4;
  }
  CHECK(nodes == 12);  // 6 node labels + 6 edge labels
  CHECK(edges == 6);
  CHECK(dot.find("first") != std::string::npos);
  CHECK(dot.find("2-d") == std::string::npos);
}

TEST_CASE("orbit json carries the Jordan data and the dimension identity") {
  RootSystem sys = RootSystem::build(Family::B, 4);
  Json j = orbit_json(sys, {4});
  CHECK(j["jordan_type"].size() == 5);
  CHECK(j["jordan_type"][0] == "3");
  CHECK(j["orbit_dim"] == "20");
  CHECK(j["dim_identity_ok"] == true);
}

TEST_CASE("catalog rows: fixed header and quoted fields") {
  CHECK(catalog_header() ==
        "version,family,rank,marked,S,N,q,walls_first,walls_2s,walls_2d,jordan_type,orbit_dim,"
        "all_checks_passed");
  CatalogRow row = make_catalog_row(Family::B, 4, {4});
  std::string csv = catalog_csv(row);
  CHECK(csv.find("\"4\"") != std::string::npos);
  CHECK(csv.find("\"3,2,2,1,1\"") != std::string::npos);
  CHECK(csv.find("true") != std::string::npos);
  CHECK(row.s == 2);
  CHECK(row.n == 1);
  CHECK(row.q == 2);
  CHECK(row.walls_2s == 1);
  CHECK(row.walls_first == 0);

  CatalogRow hex = make_catalog_row(Family::D, 4, {3, 4});
  CHECK(hex.s == 6);
  CHECK(hex.n == 3);
  CHECK(hex.q == 2);
  CHECK(hex.walls_first == 6);
  CHECK(hex.all_checks_passed);
}

TEST_CASE("curated birational table") {
  CHECK(curated_birational(Family::A, 3, {2}) == true);
  CHECK(curated_birational(Family::D, 4, {3, 4}) == false);
  CHECK(curated_birational(Family::B, 4, {4}) == false);
  CHECK_FALSE(curated_birational(Family::B, 4, {1}).has_value());
}
