#ifndef REDUCT_REPORT_HPP
#define REDUCT_REPORT_HPP

#include "reduct/classification.hpp"
#include "reduct/field_space.hpp"
#include "reduct/interval_enum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace reduct {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kWorkersEnvVar = "REDUCT_ATLAS_WORKERS";

/// Exit-code contract: 0 ok, 2 usage/bounds, 3 internal check,
/// 4 precondition, 5 property violation.
struct RunConfig {
  uint32_t p = 3;
  uint32_t n = 2;
  uint64_t seed = kChainSeed;
  unsigned workers = 0;  // 0 = from REDUCT_ATLAS_WORKERS, else hardware
  uint32_t max_points = kDefaultMaxPoints;
  uint32_t catalog_max_points = 27;
  uint64_t orbit_budget = 2000000;
  bool allow_large_enum = false;

  std::string out_path;   // catalog / enumerate output file ("" = stdout)
  std::string gens_path;  // classify input
  std::string suite;      // verify
  std::vector<VecIndex> set;  // akset S
  uint32_t k = 2;
  VecIndex v = 0, w = 0;          // acl
  std::string group_name = "gl";  // akset: gl | agl | sym | sym0
};

unsigned resolve_workers(const RunConfig& cfg);

/// Canonical JSON payloads (sorted keys, documented array orders, orders as
/// decimal strings). Byte-identical across runs with the same seed; wall time
/// deliberately lives outside these strings.
std::string catalog_json(const RunConfig& cfg);
std::string enumerate_json(const RunConfig& cfg);
std::string classify_json(const RunConfig& cfg);
std::string acl_json(const RunConfig& cfg);
std::string akset_json(const RunConfig& cfg);
std::string verify_json(const RunConfig& cfg, bool& passed);

// CLI entry points; return process exit codes and report wall time on stderr.
int cmd_catalog(const RunConfig& cfg);
int cmd_classify(const RunConfig& cfg);
int cmd_enumerate(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_acl(const RunConfig& cfg);
int cmd_akset(const RunConfig& cfg);

/// Map an Error to the exit-code contract.
int exit_code_for(const class Error& e);

} // namespace reduct

#endif
