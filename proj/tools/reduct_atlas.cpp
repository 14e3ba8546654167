// reduct-atlas: catalog, classify and cross-check the closed groups between
// Aut(V) and Sym(V) for V = F_p^n at desk scale.

#include "reduct/report.hpp"

#include <CLI11.hpp>

#include <string>

int main(int argc, char** argv) {
  CLI::App app{"finite-scale atlas of the closed supergroups of Aut(F_p^n)"};
  app.require_subcommand(1);

  reduct::RunConfig cfg;
  std::string set_arg;

  auto add_common = [&](CLI::App* sub, bool needs_pn = true) {
    if (needs_pn) {
      sub->add_option("--p", cfg.p, "odd prime p");
      sub->add_option("--n", cfg.n, "dimension n");
    }
    sub->add_option("--seed", cfg.seed, "seed for randomized chain construction");
    sub->add_option("--workers", cfg.workers,
                    "worker count (default: $" + std::string(reduct::kWorkersEnvVar) + ")");
    sub->add_option("--max-points", cfg.max_points, "degree budget for constructions");
    sub->add_option("--orbit-budget", cfg.orbit_budget, "tuple-orbit memory budget");
  };

  auto* cat = app.add_subcommand("catalog", "emit the candidate-group catalog as JSON");
  add_common(cat);
  cat->add_option("--out", cfg.out_path, "output file (default stdout)");

  auto* cls = app.add_subcommand("classify", "classify a group given by a generator file");
  add_common(cls, false);
  cls->add_option("--gens", cfg.gens_path, "generator file (line 1: 'p n')")->required();

  auto* enu = app.add_subcommand("enumerate", "exhaustively enumerate the overgroup interval");
  add_common(enu);
  enu->add_option("--out", cfg.out_path, "output file (default stdout)");
  enu->add_flag("--allow-large", cfg.allow_large_enum,
                "override the p^n <= 9 gate (cost warning: the BFS is exponential)");

  auto* ver = app.add_subcommand("verify", "run a named property suite");
  add_common(ver);
  ver->add_option("--suite", cfg.suite, "sigma|geometry|acl|akset|gnh-order|interval")->required();

  auto* acl = app.add_subcommand("acl", "algebraic closure of a pair under AGL");
  add_common(acl);
  acl->add_option("--v", cfg.v, "first vector index")->required();
  acl->add_option("--w", cfg.w, "second vector index")->required();

  auto* aks = app.add_subcommand("akset", "A_k(S) for a named group");
  add_common(aks);
  aks->add_option("--S", set_arg, "comma-separated nonzero vector indices")->required();
  aks->add_option("--k", cfg.k, "target dimension k")->required();
  aks->add_option("--group", cfg.group_name, "gl|agl|sym|sym0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors are exit 2 by contract
  }

  if (!set_arg.empty()) {
    size_t pos = 0;
    while (pos <= set_arg.size()) {
      size_t comma = set_arg.find(',', pos);
      if (comma == std::string::npos) comma = set_arg.size();
      try {
        cfg.set.push_back(reduct::VecIndex(std::stoul(set_arg.substr(pos, comma - pos))));
      } catch (...) {
        std::fprintf(stderr, "error: bad --S entry\n");
        return 2;
      }
      pos = comma + 1;
    }
  }

  if (cat->parsed()) return reduct::cmd_catalog(cfg);
  if (cls->parsed()) return reduct::cmd_classify(cfg);
  if (enu->parsed()) return reduct::cmd_enumerate(cfg);
  if (ver->parsed()) return reduct::cmd_verify(cfg);
  if (acl->parsed()) return reduct::cmd_acl(cfg);
  if (aks->parsed()) return reduct::cmd_akset(cfg);
  return 2;
}
