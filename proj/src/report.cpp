#include "reduct/report.hpp"

#include "reduct/errors.hpp"
#include "reduct/gen_io.hpp"
#include "reduct/geometry.hpp"
#include "reduct/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace reduct {

using nlohmann::json;

unsigned resolve_workers(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  if (const char* env = std::getenv(kWorkersEnvVar)) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0 && v <= 256) return unsigned(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

namespace {

json meta_json(const RunConfig& cfg) {
  return json{{"p", cfg.p}, {"n", cfg.n}, {"seed", cfg.seed}, {"tool_version", kToolVersion}};
}

json record_json(const ClassificationRecord& rec) {
  json j;
  j["p"] = rec.p;
  j["n"] = rec.n;
  j["order"] = rec.order;
  j["fixes_zero"] = rec.fixes_zero;
  j["gamma"] = rec.gamma;
  if (rec.preserves_lines.has_value())
    j["preserves_lines"] = *rec.preserves_lines;
  else
    j["preserves_lines"] = nullptr;
  j["case"] = to_string(rec.group_case);
  j["N"] = rec.N;
  j["H"] = rec.H;
  j["round_trip_ok"] = rec.round_trip_ok;
  j["notes"] = rec.notes;
  return j;
}

json group_json(const Space& sp, const PermGroup& g, const ClassificationRecord& rec) {
  json j;
  j["order"] = to_decimal(g.order());
  j["generators"] = generator_lines(sp.p(), sp.n(), g.strong_generators());
  j["record"] = record_json(rec);
  return j;
}

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) errors::parse("cannot open output file: " + cfg.out_path);
  out << payload;
}

struct WallClock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

} // namespace

std::string catalog_json(const RunConfig& cfg) {
  Space sp(cfg.p, cfg.n, cfg.max_points);
  CatalogResult cat = build_catalog(sp, cfg.seed, cfg.catalog_max_points);
  json j = meta_json(cfg);
  json groups = json::array();
  for (const auto& cg : cat.groups) groups.push_back(group_json(sp, cg.group, cg.record));
  j["groups"] = groups;
  json cons = json::array();
  for (const auto& c : cat.constructions) {
    json cj;
    cj["kind"] = c.kind;
    cj["gamma"] = c.gamma;
    cj["N"] = c.N;
    cj["H"] = c.H;
    cj["group_index"] = c.group_index;
    cj["collapsed"] = c.collapsed;
    cj["round_trip_ok"] = c.round_trip_ok;
    cj["absorbed_into"] = c.absorbed_into;
    cons.push_back(cj);
  }
  j["constructions"] = cons;
  return j.dump(2) + "\n";
}

std::string enumerate_json(const RunConfig& cfg) {
  Space sp(cfg.p, cfg.n, cfg.max_points);
  IntervalReport rep = enumerate_overgroups(sp, cfg.seed, cfg.allow_large_enum);
  CatalogResult cat = build_catalog(sp, cfg.seed, cfg.catalog_max_points);
  cross_check(rep, cat);

  json j = meta_json(cfg);
  json groups = json::array();
  for (const auto& e : rep.groups) groups.push_back(group_json(sp, e.group, e.record));
  j["groups"] = groups;
  json matched = json::array();
  for (auto [ci, ei] : rep.matched) matched.push_back(json{{"catalog", ci}, {"enumerated", ei}});
  j["matched_catalog"] = matched;
  j["unmatched_catalog"] = rep.unmatched_catalog;
  j["unmatched"] = rep.unmatched_enumerated;
  j["group_count"] = rep.groups.size();
  return j.dump(2) + "\n";
}

std::string classify_json(const RunConfig& cfg) {
  GenFile gf = read_generators_file(cfg.gens_path);
  Space sp(gf.p, gf.n, cfg.max_points);
  PermGroup g = PermGroup::generate(gf.gens, cfg.seed);
  ClassificationRecord rec = classify(sp, g, cfg.seed);
  json j = meta_json(cfg);
  j["p"] = gf.p;
  j["n"] = gf.n;
  j["record"] = record_json(rec);
  return j.dump(2) + "\n";
}

std::string acl_json(const RunConfig& cfg) {
  Space sp(cfg.p, cfg.n, cfg.max_points);
  PermGroup agl = agl_group(sp, cfg.seed);
  std::vector<VecIndex> out = acl_pair(sp, agl, cfg.v, cfg.w, cfg.seed);
  json j = meta_json(cfg);
  j["group"] = "agl";
  j["v"] = cfg.v;
  j["w"] = cfg.w;
  j["acl"] = out;
  j["size"] = out.size();
  j["affine_closure"] = affine_closure(sp, {cfg.v, cfg.w});
  return j.dump(2) + "\n";
}

namespace {

PermGroup group_by_name(const Space& sp, const std::string& name, uint64_t seed) {
  if (name == "gl") return gl_group(sp, seed);
  if (name == "agl") return agl_group(sp, seed);
  if (name == "sym") return sym_group(sp.size(), seed);
  if (name == "sym0") return sym_fixing_zero(sp.size(), seed);
  errors::parse("unknown group name '" + name + "' (expected gl|agl|sym|sym0)");
}

} // namespace

std::string akset_json(const RunConfig& cfg) {
  Space sp(cfg.p, cfg.n, cfg.max_points);
  PermGroup g = group_by_name(sp, cfg.group_name, cfg.seed);
  AkResult r = a_k_set(sp, g, cfg.set, cfg.k, cfg.orbit_budget, cfg.seed);
  json j = meta_json(cfg);
  j["group"] = cfg.group_name;
  j["S"] = r.s;
  j["k"] = r.k;
  j["shape"] = to_string(r.shape);
  j["set"] = r.set;
  j["witness_subspace"] = r.witness_subspace;
  if (r.s_class_count) j["s_class_count"] = *r.s_class_count;
  if (r.kandn_bound) j["kandn_bound"] = *r.kandn_bound;
  if (r.kandn_consistent) j["kandn_consistent"] = *r.kandn_consistent;
  return j.dump(2) + "\n";
}

std::string verify_json(const RunConfig& cfg, bool& passed) {
  SuiteResult res;
  if (cfg.suite == "sigma")
    res = verify_sigma(cfg.p, cfg.n, 1000, cfg.seed);
  else if (cfg.suite == "geometry")
    res = verify_geometry(cfg.p, cfg.n, cfg.seed);
  else if (cfg.suite == "acl")
    res = verify_acl(cfg.p, cfg.n, cfg.seed);
  else if (cfg.suite == "akset")
    res = verify_akset(cfg.p, cfg.n, cfg.seed);
  else if (cfg.suite == "gnh-order")
    res = verify_gnh_order(cfg.p, cfg.n, cfg.seed);
  else if (cfg.suite == "interval")
    res = verify_interval(cfg.seed);
  else
    errors::parse("unknown suite '" + cfg.suite +
                  "' (expected sigma|geometry|acl|akset|gnh-order|interval)");
  passed = res.passed;
  json j = meta_json(cfg);
  j["suite"] = res.suite;
  j["passed"] = res.passed;
  j["checks"] = res.checks;
  j["failures"] = res.failures;
  return j.dump(2) + "\n";
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Bounds:
    case ErrorKind::Parse:
    case ErrorKind::Budget: return 2;
    case ErrorKind::Internal: return 3;
    case ErrorKind::Precondition: return 4;
    case ErrorKind::Property: return 5;
  }
  return 3;
}

namespace {

template <typename F>
int run_command(const RunConfig& cfg, F&& body) {
  WallClock clock;
  try {
    int rc = body();
    std::cerr << "wall time: " << clock.seconds() << " s\n";
    return rc;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

} // namespace

int cmd_catalog(const RunConfig& cfg) {
  return run_command(cfg, [&] {
    emit(cfg, catalog_json(cfg));
    return 0;
  });
}

int cmd_enumerate(const RunConfig& cfg) {
  return run_command(cfg, [&] {
    emit(cfg, enumerate_json(cfg));
    return 0;
  });
}

int cmd_classify(const RunConfig& cfg) {
  return run_command(cfg, [&] {
    std::cout << classify_json(cfg);
    return 0;
  });
}

int cmd_acl(const RunConfig& cfg) {
  return run_command(cfg, [&] {
    std::cout << acl_json(cfg);
    return 0;
  });
}

int cmd_akset(const RunConfig& cfg) {
  return run_command(cfg, [&] {
    std::cout << akset_json(cfg);
    return 0;
  });
}

int cmd_verify(const RunConfig& cfg) {
  return run_command(cfg, [&] {
    bool passed = false;
    std::string payload = verify_json(cfg, passed);
    std::cout << payload;
    return passed ? 0 : 5;
  });
}

} // namespace reduct
