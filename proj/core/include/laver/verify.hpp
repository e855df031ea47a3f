#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace laver {

struct SuiteResult {
  std::string suite;
  std::uint64_t bound = 0;
  std::uint64_t seed = 0;
  std::uint64_t instances = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<std::string> counterexamples;  // first few, full input tuples
  std::vector<std::string> notes;            // advisory findings
  std::int64_t millis = 0;

  bool pass() const { return counterexample_count == 0; }
};

struct VerifyOptions {
  std::uint64_t max = 0;  // 0 = suite default bound
  std::uint64_t seed = 1;
};

// Falsification suites, one per proposition family. Deterministic given
// the seed; a counterexample line carries the full input tuple.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts = {});

const std::vector<std::string>& suite_names();

nlohmann::json to_json(const SuiteResult& r);

}  // namespace laver
