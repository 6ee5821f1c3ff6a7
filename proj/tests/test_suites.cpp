#include <doctest.h>

#include <sstream>

#include "qha/suites.hpp"

using namespace qha;

TEST_CASE("verify suite passes on a small config") {
  SuiteConfig cfg;
  cfg.n_list = {3, 5};
  cfg.ensemble_size = 3;
  cfg.seed = 7;
  const auto results = run_verify_suite(cfg);
  CHECK(results.size() > 30);
  for (const auto& r : results) {
    INFO(r.name, " measured=", r.measured, " threshold=", r.threshold);
    CHECK(r.status != CheckStatus::kFail);
  }
}

TEST_CASE("verify suite json is deterministic for a fixed seed") {
  SuiteConfig cfg;
  cfg.n_list = {3};
  cfg.ensemble_size = 2;
  cfg.seed = 99;
  const std::string a = results_json(run_verify_suite(cfg));
  const std::string b = results_json(run_verify_suite(cfg));
  CHECK(a == b);
  CHECK(a.find("runtime") == std::string::npos);  // bit-identical across runs
}

TEST_CASE("config validation names the odd-N requirement") {
  std::stringstream ss("N_list = 4\n");
  const KeyValueConfig kv = KeyValueConfig::parse(ss);
  try {
    SuiteConfig::from_key_values(kv);
    FAIL("expected rejection of even N");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("odd") != std::string::npos);
  }
}

TEST_CASE("tolerance overrides flip a check") {
  SuiteConfig cfg;
  cfg.n_list = {3};
  cfg.ensemble_size = 2;
  cfg.tolerances["moyal_identity"] = 1e-300;  // unreachable
  const auto results = run_verify_suite(cfg);
  bool found = false;
  for (const auto& r : results) {
    if (r.name == "moyal_identity") {
      found = true;
      CHECK(r.status == CheckStatus::kFail);
    }
  }
  CHECK(found);
  CHECK_FALSE(all_passed(results));
}

TEST_CASE("results table mentions every check") {
  SuiteConfig cfg;
  cfg.n_list = {3};
  cfg.ensemble_size = 1;
  const auto results = run_verify_suite(cfg);
  const std::string table = results_table(results);
  for (const auto& r : results) {
    CHECK(table.find(r.name) != std::string::npos);
  }
}
