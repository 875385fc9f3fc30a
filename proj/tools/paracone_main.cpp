// Command-line surface of the chamber engine: enumeration of parabolic
// chambers, cone complexes, flop walks, Richardson orbit data, a catalog
// stream and the verification suite.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "paracone/serialize.hpp"
#include "paracone/verification.hpp"

namespace {

using namespace paracone;

struct Options {
  std::string family = "A";
  int rank = 2;
  std::string marked;
  std::string chi;
  std::string start;
  std::string format = "json";
  std::string catalog_format = "csv";
  uint64_t seed = 20240501;
  int max_rank = 4;
  int jobs = 0;
  long long skip = 0;
  int cover_samples = 2000;
  int walk_samples = 2000;
  int movable_samples = 500;
  bool inject_fault = false;
  std::string config_file;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ConfigError("bad integer list entry '" + tok + "'");
    }
  }
  require(!out.empty(), "empty list '" + s + "'");
  return out;
}

RatVec parse_rat_list(const std::string& s) {
  RatVec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(parse_rat(tok));
  }
  require(!out.empty(), "empty rational list '" + s + "'");
  return out;
}

void load_config(Options& opt) {
  if (opt.config_file.empty()) return;
  std::ifstream f(opt.config_file);
  require(f.good(), "cannot open config file " + opt.config_file);
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) continue;
    try {
      if (key == "jobs") opt.jobs = std::stoi(val);
      else if (key == "cover_samples") opt.cover_samples = std::stoi(val);
      else if (key == "walk_samples") opt.walk_samples = std::stoi(val);
      else if (key == "movable_samples") opt.movable_samples = std::stoi(val);
      else if (key == "seed") opt.seed = std::stoull(val);
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("bad config value for '" + key + "'");
    }
  }
}

Instance make_instance(const Options& opt) {
  require(!opt.marked.empty(), "a nonempty --marked list is required");
  return Instance(family_from_char(opt.family.at(0)), opt.rank, parse_int_list(opt.marked));
}

int cmd_enumerate(const Options& opt) {
  Instance inst = make_instance(opt);
  std::cout << enumerate_json(inst.complex()).dump(2) << "\n";
  return 0;
}

int cmd_chambers(const Options& opt) {
  Instance inst = make_instance(opt);
  if (opt.format == "dot")
    std::cout << chambers_dot(inst.complex());
  else
    std::cout << chambers_json(inst.complex()).dump(2) << "\n";
  return 0;
}

int cmd_walk(const Options& opt) {
  Instance inst = make_instance(opt);
  const ChamberComplex& complex = inst.complex();
  require(!opt.chi.empty(), "--chi is required");
  RatVec coords = parse_rat_list(opt.chi);
  CharacterVector chi = character_on_marked(complex.system(), complex.marked(), coords);
  int start = complex.standard_id();
  if (!opt.start.empty()) {
    std::vector<int> want = parse_int_list(opt.start);
    std::set<int> wantset(want.begin(), want.end());
    start = -1;
    for (int id = 0; id < complex.size() && start < 0; ++id)
      if (complex.chamber(id).standardization.diagram.marked == wantset) start = id;
    require(start >= 0, "no chamber carries the requested start diagram");
  }
  WalkTrace trace = walk(complex, start, chi);
  std::cout << walk_json(complex, trace).dump(2) << "\n";
  return 0;
}

int cmd_orbit(const Options& opt) {
  require(!opt.marked.empty(), "a nonempty --marked list is required");
  Family fam = family_from_char(opt.family.at(0));
  RootSystem sys = RootSystem::build(fam, opt.rank);
  std::cout << orbit_json(sys, parse_int_list(opt.marked)).dump(2) << "\n";
  return 0;
}

int cmd_catalog(const Options& opt) {
  require(opt.catalog_format == "csv", "catalog emits csv only");
  struct Item {
    Family f;
    int rank;
    std::vector<int> marked;
  };
  std::vector<Item> items;
  for (auto [f, r] : families_up_to(opt.max_rank))
    for (auto& m : all_markings(r)) items.push_back({f, r, m});
  std::cout << catalog_header() << "\n";
  int jobs = opt.jobs;
  if (jobs <= 0) {
    const char* env = std::getenv("PARACONE_JOBS");
    jobs = env ? std::max(1, std::atoi(env)) : 1;
  }
  // Rows are independent; compute in deterministic batches and emit in
  // order regardless of the worker count.
  for (size_t base = (size_t)opt.skip; base < items.size(); base += (size_t)jobs) {
    size_t end = std::min(items.size(), base + (size_t)jobs);
    std::vector<std::future<CatalogRow>> batch;
    for (size_t i = base; i < end; ++i) {
      const Item& it = items[i];
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&it] { return make_catalog_row(it.f, it.rank, it.marked); }));
    }
    for (auto& fut : batch) std::cout << catalog_csv(fut.get()) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  struct Target {
    Family f;
    int rank;
    std::vector<int> marked;
  };
  std::vector<Target> targets;
  if (!opt.marked.empty()) {
    targets.push_back({family_from_char(opt.family.at(0)), opt.rank, parse_int_list(opt.marked)});
  } else {
    for (auto [f, r] : families_up_to(opt.max_rank))
      for (auto& m : all_markings(r)) targets.push_back({f, r, m});
  }
  Json report;
  report["checks"] = Json::array();
  bool all_pass = true;
  auto add = [&](const std::string& where, const CheckResult& r) {
    Json c;
    c["instance"] = where;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["details"] = r.details;
    report["checks"].push_back(c);
    if (!r.pass) all_pass = false;
  };
  for (const auto& t : targets) {
    Instance inst(t.f, t.rank, t.marked);
    std::string where = inst.label();
    add(where, inst.check_counting());
    add(where, inst.check_oracle_equivalence());
    add(where, inst.check_antipodal());
    add(where, inst.check_adjacency_twist());
    add(where, inst.check_cover(opt.cover_samples, opt.seed));
    add(where, inst.check_equivariance());
    add(where, inst.check_walk_agreement(opt.walk_samples, opt.seed + 1));
    add(where, inst.check_movable_property(opt.movable_samples, opt.seed + 2));
    add(where, inst.check_dimension_identity());
  }
  add("global", check_collapse_vectors(12));
  if (opt.inject_fault) {
    CheckResult fault{"injected-fault", false, "synthetic failure requested by --inject-fault"};
    add("global", fault);
  }
  report["pass"] = all_pass;
  std::cout << report.dump(2) << "\n";
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chamber engine for parabolic nef cones and Mukai flop walks"};
  app.require_subcommand(1);
  Options opt;

  auto add_instance_flags = [&](CLI::App* sub) {
    sub->add_option("--family,-f", opt.family, "family letter A-G");
    sub->add_option("--rank,-r", opt.rank, "rank");
    sub->add_option("--marked,-m", opt.marked, "comma list of marked vertices (Bourbaki)");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--config", opt.config_file, "key=value configuration file");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list S(l0) with diagrams and counts");
  add_instance_flags(enumerate);
  CLI::App* chambers = app.add_subcommand("chambers", "chamber complex with cones and walls");
  add_instance_flags(chambers);
  chambers->add_option("--format", opt.format, "json|dot");
  CLI::App* walkc = app.add_subcommand("walk", "walk a character to its nef chamber");
  add_instance_flags(walkc);
  walkc->add_option("--chi", opt.chi, "character in marked-vertex coordinates, e.g. -2,-1");
  walkc->add_option("--start", opt.start, "start diagram marked set (default: standard)");
  CLI::App* orbit = app.add_subcommand("orbit", "Richardson orbit Jordan type and dimension");
  add_instance_flags(orbit);
  CLI::App* catalog = app.add_subcommand("catalog", "CSV catalog over all markings");
  catalog->add_option("--format", opt.catalog_format, "csv");
  catalog->add_option("--max-rank", opt.max_rank, "rank bound");
  catalog->add_option("--jobs,-j", opt.jobs, "worker count (default env PARACONE_JOBS or 1)");
  catalog->add_option("--skip", opt.skip, "skip this many rows (resume)");
  catalog->add_option("--config", opt.config_file, "key=value configuration file");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_instance_flags(verify);
  verify->add_option("--max-rank", opt.max_rank, "rank bound for the sweep form");
  verify->add_option("--cover-samples", opt.cover_samples, "cover check samples per instance");
  verify->add_option("--walk-samples", opt.walk_samples, "walk check samples per instance");
  verify->add_option("--movable-samples", opt.movable_samples, "movable check samples");
  verify->add_flag("--inject-fault", opt.inject_fault, "force a failing check (harness test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    load_config(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (chambers->parsed()) return cmd_chambers(opt);
    if (walkc->parsed()) return cmd_walk(opt);
    if (orbit->parsed()) return cmd_orbit(opt);
    if (catalog->parsed()) return cmd_catalog(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    Json witness;
    witness["internal_invariant_violation"] = e.what();
    std::cerr << witness.dump(2) << "\n";
    return 2;
  }
  return 1;
}
