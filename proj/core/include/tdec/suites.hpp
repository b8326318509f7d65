#ifndef TDEC_SUITES_HPP
#define TDEC_SUITES_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "tdec/graph.hpp"

namespace tdec {

/// One verification instance. pass is recomputable from observed and the
/// stated relation; skipped records document side-condition or timeout skips
/// instead of silently dropping instances.
struct TheoremCheckRecord {
  std::string theorem_id;
  std::string instance;
  std::string expected;
  std::vector<long long> observed;
  bool pass = false;
  bool skipped = false;
  double runtime_ms = 0.0;
};

struct RunConfig {
  std::chrono::milliseconds instance_timeout{60'000};
  int enum_cap = 5;          // max vertices for the labeled corpus
  int solve_cap_edges = 16;  // max edges for corpus-driven exact solves
  std::optional<int> max_n;  // per-suite scale override
  int threads = 0;           // 0: TDEC_THREADS env, else hardware
  bool include_meta = true;
  enum class Format { Json, Csv, Table };
  Format format = Format::Json;
};

struct SuiteResult {
  std::string suite;
  std::vector<TheoremCheckRecord> records;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool all_passed() const { return failed == 0; }
};

const std::vector<std::string>& suite_registry();
SuiteResult run_suite(const std::string& suite_id, const RunConfig& config);

std::string suite_to_json(const SuiteResult& result, const RunConfig& config);
std::string suite_to_csv(const SuiteResult& result, const RunConfig& config);
std::string suite_to_table(const SuiteResult& result);

}  // namespace tdec

#endif
