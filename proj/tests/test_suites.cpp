#include <doctest.h>

#include <algorithm>

#include "tdec/suites.hpp"

using namespace tdec;

namespace {

RunConfig quick_config() {
  RunConfig cfg;
  cfg.instance_timeout = std::chrono::milliseconds(30'000);
  cfg.enum_cap = 4;
  cfg.include_meta = false;
  return cfg;
}

}  // namespace

TEST_CASE("registry") {
  const auto& registry = suite_registry();
  CHECK(registry.size() == 20);
  CHECK(std::find(registry.begin(), registry.end(), "oracle-agreement") != registry.end());
  CHECK_THROWS_AS(run_suite("no-such-suite", quick_config()), Error);
}

TEST_CASE("path-formula suite passes exactly while the table is correct") {
  auto cfg = quick_config();
  cfg.max_n = 9;
  auto ok = run_suite("path-formula", cfg);
  CHECK(ok.records.size() == 7);
  CHECK(ok.failed == 0);

  // the solver disproves the tabulated value from n = 10 on; the suite must
  // report that honestly rather than pass
  cfg.max_n = 10;
  auto refuted = run_suite("path-formula", cfg);
  CHECK(refuted.failed == 1);
  CHECK(!refuted.records.back().pass);
  CHECK(refuted.records.back().observed == std::vector<long long>{6, 7});
}

TEST_CASE("cycle-formula suite: n = 9 is the first divergence") {
  auto cfg = quick_config();
  cfg.max_n = 8;
  CHECK(run_suite("cycle-formula", cfg).failed == 0);
  cfg.max_n = 9;
  auto refuted = run_suite("cycle-formula", cfg);
  CHECK(refuted.failed == 1);
  CHECK(refuted.records.back().observed == std::vector<long long>{6, 7});
}

TEST_CASE("formula-level suites pass") {
  auto cfg = quick_config();
  CHECK(run_suite("path-cycle-corollary", cfg).failed == 0);
  CHECK(run_suite("gap-growth", cfg).failed == 0);
  cfg.max_n = 30;
  CHECK(run_suite("subdiv-k10-bounds", cfg).failed == 0);
}

TEST_CASE("family suites pass at small scale") {
  auto cfg = quick_config();
  cfg.max_n = 5;
  CHECK(run_suite("star", cfg).failed == 0);
  CHECK(run_suite("wheel", cfg).failed == 0);
  cfg.max_n = 2;
  CHECK(run_suite("friendship", cfg).failed == 0);
  cfg.max_n = 4;
  CHECK(run_suite("complete-bounds", cfg).failed == 0);
  cfg.max_n = 5;
  auto bip = run_suite("bipartite-bounds", cfg);
  CHECK(bip.failed == 0);
  CHECK(bip.records.size() > 4);  // pairs plus the appended (1,6) sharpness case
}

TEST_CASE("corpus suites at n <= 4") {
  auto cfg = quick_config();
  auto delta = run_suite("delta-bound", cfg);
  CHECK(delta.failed == 0);
  CHECK(delta.skipped >= 1);  // K2 admits no coloring

  auto edges = run_suite("edge-removal", cfg);
  CHECK(edges.failed == 0);
  CHECK(edges.skipped >= 1);  // bridges are skipped with a record

  CHECK(run_suite("vertex-removal", cfg).failed == 0);
  CHECK(run_suite("contraction", cfg).failed == 0);
  CHECK(run_suite("oracle-agreement", cfg).failed == 0);
}

TEST_CASE("subdivision suites") {
  auto cfg = quick_config();
  CHECK(run_suite("subdiv-lower-m", cfg).failed == 0);
  CHECK(run_suite("subdiv-sandwich", cfg).failed == 0);
  CHECK(run_suite("subdiv-monotone", cfg).failed == 0);
  cfg.max_n = 3;
  CHECK(run_suite("subdiv-star-13", cfg).failed == 0);
}

TEST_CASE("induced-p6 suite asserts only the specialized bound") {
  auto cfg = quick_config();
  cfg.max_n = 10;
  auto result = run_suite("induced-p6-bound", cfg);
  CHECK(result.failed == 0);
  // the report-only record for P10 shows the general form overshooting
  bool found = false;
  for (const auto& r : result.records)
    if (r.instance.find("path:10 general") != std::string::npos) {
      found = true;
      CHECK(r.observed == std::vector<long long>{6, 7});
      CHECK(r.pass);
    }
  CHECK(found);
}

TEST_CASE("a throwing instance becomes a failing record, not a crash") {
  auto cfg = quick_config();
  cfg.max_n = 25;  // beyond the induced-path size cap
  auto result = run_suite("induced-p6-bound", cfg);
  CHECK(result.failed > 0);
  bool saw_error = false;
  for (const auto& r : result.records)
    if (r.theorem_id == "instance-error") {
      saw_error = true;
      CHECK(r.expected.find("SizeCapExceeded") != std::string::npos);
    }
  CHECK(saw_error);
}

TEST_CASE("deterministic output without meta") {
  auto cfg = quick_config();
  cfg.max_n = 6;
  auto a = run_suite("path-formula", cfg);
  auto b = run_suite("path-formula", cfg);
  CHECK(suite_to_json(a, cfg) == suite_to_json(b, cfg));
  CHECK(suite_to_csv(a, cfg) == suite_to_csv(b, cfg));

  // JSON and CSV carry the same records
  CHECK(a.records.size() == b.records.size());
  auto table = suite_to_table(a);
  CHECK(table.find("PASS") != std::string::npos);
}

TEST_CASE("worker pool keeps instance order and results") {
  auto serial = quick_config();
  serial.threads = 1;
  auto pooled = quick_config();
  pooled.threads = 4;
  for (const char* suite : {"edge-removal", "oracle-agreement", "subdiv-sandwich"}) {
    auto a = run_suite(suite, serial);
    auto b = run_suite(suite, pooled);
    CHECK(suite_to_json(a, serial) == suite_to_json(b, pooled));
  }
}
