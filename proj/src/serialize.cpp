#include "paracone/serialize.hpp"

#include <algorithm>

#include "paracone/verification.hpp"

namespace paracone {

namespace {

std::string marked_field(const std::vector<int>& marked) {
  std::string s;
  for (size_t i = 0; i < marked.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(marked[i]);
  }
  return s;
}

Json diagram_json(const MarkedDiagram& d) {
  Json j = Json::array();
  for (int v : d.marked) j.push_back(std::to_string(v));
  return j;
}

Json root_json(const Root& r) {
  Json j = Json::array();
  for (int x : r.coords) j.push_back(std::to_string(x));
  return j;
}

Json wall_json(const Wall& w) {
  Json j;
  j["a"] = std::to_string(w.a);
  j["b"] = std::to_string(w.b);
  j["vertex_a"] = std::to_string(w.va);
  j["vertex_b"] = std::to_string(w.vb);
  j["kind"] = twist_kind_str(w.kind);
  j["flop"] = w.flop.str();
  if (w.flop.canonical_alias) j["alias"] = *w.flop.canonical_alias;
  j["normal_from_a"] = json_vec(w.normal_from_a);
  return j;
}

}  // namespace

Json json_int(long long v) { return std::to_string(v); }

Json json_vec(const IntVec& v) {
  Json j = Json::array();
  for (long long x : v) j.push_back(std::to_string(x));
  return j;
}

Json json_rat_vec(const RatVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

Json instance_json(const ChamberComplex& complex) {
  const RootSystem& sys = complex.system();
  Json j;
  j["family"] = std::string(1, family_char(sys.family()));
  j["rank"] = std::to_string(sys.rank());
  Json marked = Json::array();
  for (int v : complex.marked()) marked.push_back(std::to_string(v));
  j["marked"] = marked;
  Json levi = Json::array();
  for (int v : complex.levi_unmarked()) levi.push_back(std::to_string(v));
  j["levi_unmarked"] = levi;
  return j;
}

Json enumerate_json(const ChamberComplex& complex) {
  Json j;
  j["instance"] = instance_json(complex);
  CountReport counts = verify_count(complex);
  j["counts"] = {{"S", json_int(counts.s)}, {"N", json_int(counts.n)}, {"q", json_int(counts.q)}};
  Json chambers = Json::array();
  for (int id = 0; id < complex.size(); ++id) {
    const Chamber& ch = complex.chamber(id);
    Json c;
    c["id"] = std::to_string(id);
    c["diagram_marked"] = diagram_json(ch.standardization.diagram);
    Json nil = Json::array();
    for (const auto& r : ch.parabolic.nilradical) nil.push_back(root_json(r));
    c["nilradical"] = nil;
    c["opposite"] = std::to_string(ch.opposite);
    chambers.push_back(std::move(c));
  }
  j["chambers"] = chambers;
  return j;
}

Json chambers_json(const ChamberComplex& complex) {
  Json j = enumerate_json(complex);
  for (int id = 0; id < complex.size(); ++id) {
    const Chamber& ch = complex.chamber(id);
    Json cone;
    Json normals = Json::array(), rays = Json::array(), labels = Json::array();
    for (size_t i = 0; i < ch.cone.normals.size(); ++i) {
      normals.push_back(json_vec(ch.cone.normals[i]));
      rays.push_back(json_vec(ch.cone.rays[i]));
      labels.push_back(std::to_string(ch.cone.facet_vertices[i]));
    }
    cone["facet_vertices"] = labels;
    cone["normals"] = normals;
    cone["rays"] = rays;
    j["chambers"][id]["cone"] = cone;
  }
  Json walls = Json::array();
  for (const auto& w : complex.walls()) walls.push_back(wall_json(w));
  j["walls"] = walls;
  return j;
}

std::string chambers_dot(const ChamberComplex& complex) {
  std::string out = "graph chambers {\n  node [shape=box];\n";
  for (int id = 0; id < complex.size(); ++id) {
    out += "  c" + std::to_string(id) + " [label=\"" +
           complex.chamber(id).standardization.diagram.str() + "\"];\n";
  }
  for (const auto& w : complex.walls()) {
    std::string label = std::to_string(w.va) + "~" + std::to_string(w.vb) + "|" +
                        twist_kind_str(w.kind) + "|" + w.flop.str();
    if (w.flop.canonical_alias) label += "|" + *w.flop.canonical_alias;
    out += "  c" + std::to_string(w.a) + " -- c" + std::to_string(w.b) + " [label=\"" + label +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

Json walk_json(const ChamberComplex& complex, const WalkTrace& trace) {
  Json j;
  j["instance"] = instance_json(complex);
  j["chi"] = json_rat_vec(complex.restrict(trace.chi));
  j["start"] = std::to_string(trace.start);
  j["start_diagram"] = diagram_json(complex.chamber(trace.start).standardization.diagram);
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json st;
    st["from"] = std::to_string(s.from);
    st["to"] = std::to_string(s.to);
    st["vertex"] = std::to_string(s.vertex);
    st["kind"] = twist_kind_str(s.kind);
    st["flop"] = s.flop.str();
    if (s.flop.canonical_alias) st["alias"] = *s.flop.canonical_alias;
    steps.push_back(std::move(st));
  }
  j["steps"] = steps;
  j["final"] = std::to_string(trace.final);
  j["final_diagram"] = diagram_json(complex.chamber(trace.final).standardization.diagram);
  FiberSummary fib = central_fiber_summary(trace);
  Json fsteps = Json::array();
  for (const auto& f : fib.steps) {
    Json fs;
    fs["index"] = std::to_string(f.index);
    fs["mukai_flop"] = f.mukai_flop;
    fs["label"] = f.label;
    fsteps.push_back(std::move(fs));
  }
  j["central_fiber"] = {{"steps", fsteps}, {"stays_in_sstar", fib.stays_in_sstar}};
  return j;
}

Json orbit_json(const RootSystem& sys, const std::vector<int>& marked) {
  MarkedDiagram d{sys.family(), sys.rank(), std::set<int>(marked.begin(), marked.end())};
  Json j;
  j["family"] = std::string(1, family_char(sys.family()));
  j["rank"] = std::to_string(sys.rank());
  j["marked"] = diagram_json(d);
  FlagType flag = flag_type_of(d);
  Json blocks = Json::array();
  for (int b : flag.blocks) blocks.push_back(std::to_string(b));
  j["flag_type"] = blocks;
  j["isotropic"] = flag.isotropic;
  JordanType jt = richardson_jordan_type(sys.family(), flag);
  Json parts = Json::array();
  for (int p : jt.parts) parts.push_back(std::to_string(p));
  j["jordan_type"] = parts;
  j["very_even"] = jt.very_even;
  long long dim = orbit_dimension(jt);
  j["orbit_dim"] = json_int(dim);
  Parabolic p = standard_parabolic(sys, [&] {
    std::set<int> m(marked.begin(), marked.end());
    std::vector<int> levi;
    for (int i = 1; i <= sys.rank(); ++i)
      if (!m.count(i)) levi.push_back(i);
    return levi;
  }());
  j["nilradical_size"] = json_int((long long)p.nilradical.size());
  j["dim_identity_ok"] = dim == 2 * (long long)p.nilradical.size();
  auto mu = codim2_neighbor(jt);
  if (mu) {
    Json mp = Json::array();
    for (int x : mu->parts) mp.push_back(std::to_string(x));
    j["codim2_neighbor"] = mp;
  } else {
    j["codim2_neighbor"] = nullptr;
  }
  return j;
}

CatalogRow make_catalog_row(Family family, int rank, const std::vector<int>& marked) {
  Instance inst(family, rank, marked);
  const ChamberComplex& complex = inst.complex();
  CatalogRow row;
  row.family = family;
  row.rank = rank;
  row.marked = inst.marked();
  CountReport counts = verify_count(complex);
  row.s = counts.s;
  row.n = counts.n;
  row.q = counts.q;
  for (const auto& w : complex.walls()) {
    switch (w.kind) {
      case TwistKind::FirstKind: ++row.walls_first; break;
      case TwistKind::SecondSmall: ++row.walls_2s; break;
      case TwistKind::SecondDivisorial: ++row.walls_2d; break;
    }
  }
  bool ok = counts.ok;
  if (inst.classical()) {
    MarkedDiagram d{family, rank, std::set<int>(row.marked.begin(), row.marked.end())};
    JordanType jt = richardson_jordan_type(family, flag_type_of(d));
    long long dim = orbit_dimension(jt);
    row.jordan_type = jt.str();
    row.orbit_dim = std::to_string(dim);
    Parabolic p0 = complex.chamber(complex.standard_id()).parabolic;
    if (dim != 2 * (long long)p0.nilradical.size()) ok = false;
  }
  row.all_checks_passed = ok && inst.check_antipodal().pass;
  return row;
}

std::string catalog_header() {
  return "version,family,rank,marked,S,N,q,walls_first,walls_2s,walls_2d,jordan_type,orbit_dim,"
         "all_checks_passed";
}

std::string catalog_csv(const CatalogRow& row) {
  std::string s = "1,";
  s += std::string(1, family_char(row.family)) + "," + std::to_string(row.rank) + ",";
  s += "\"" + marked_field(row.marked) + "\",";
  s += std::to_string(row.s) + "," + std::to_string(row.n) + "," + std::to_string(row.q) + ",";
  s += std::to_string(row.walls_first) + "," + std::to_string(row.walls_2s) + "," +
       std::to_string(row.walls_2d) + ",";
  s += "\"" + row.jordan_type + "\"," + (row.orbit_dim.empty() ? "" : row.orbit_dim) + ",";
  s += row.all_checks_passed ? "true" : "false";
  return s;
}

}  // namespace paracone
