#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klab/parallel.hpp"

namespace klab {

struct SuiteConfig {
  int max_carrier = 3;
  int denom = 4;
  long long max_weight = 3;
  int max_duration = 2;
  std::uint64_t seed = 42;
  int samples = 1000;
  std::int64_t node_budget = 50'000'000;
  Exec exec = default_exec();
};

struct SuiteResult {
  std::string suite;
  bool pass = false;
  std::vector<std::pair<std::string, long long>> counts;
  std::vector<std::string> witnesses;
  std::string summary;
};

/// Names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();

/// Runs one named verification suite; throws std::invalid_argument for an
/// unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg = {});

}  // namespace klab
