#pragma once

#include <json.hpp>

#include "paracone/flopwalk.hpp"
#include "paracone/normalizer.hpp"
#include "paracone/orbits.hpp"

namespace paracone {

// Exact serialization: every integer or rational value is emitted as a
// string so no reader ever coerces through floating point. ordered_json
// keeps key order deterministic and round-trip stable.
using Json = nlohmann::ordered_json;

Json json_int(long long v);
Json json_vec(const IntVec& v);
Json json_rat_vec(const RatVec& v);

Json instance_json(const ChamberComplex& complex);
Json enumerate_json(const ChamberComplex& complex);
Json chambers_json(const ChamberComplex& complex);
std::string chambers_dot(const ChamberComplex& complex);
Json walk_json(const ChamberComplex& complex, const WalkTrace& trace);
Json orbit_json(const RootSystem& sys, const std::vector<int>& marked);

struct CatalogRow {
  Family family;
  int rank = 0;
  std::vector<int> marked;
  long long s = 0, n = 0, q = 0;
  long long walls_first = 0, walls_2s = 0, walls_2d = 0;
  std::string jordan_type;  // empty for exceptional families
  std::string orbit_dim;    // empty for exceptional families
  bool all_checks_passed = false;
};

CatalogRow make_catalog_row(Family family, int rank, const std::vector<int>& marked);

std::string catalog_header();
std::string catalog_csv(const CatalogRow& row);

}  // namespace paracone
