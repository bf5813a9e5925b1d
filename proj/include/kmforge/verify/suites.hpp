#pragma once

// Seeded verification suites shared by the command line and the acceptance run.

#include <cstdint>
#include <string>
#include <vector>

#include "kmforge/io/json.hpp"

namespace kmforge {

struct SuiteConfig {
  std::string algebra = "sl2C";
  /// Twist for jacobi/cocycle, a catalog name.
  std::string sigma = "id";
  std::uint32_t denominator = 0;
  std::uint32_t level = 0;
  std::int64_t n = 3;
  std::uint32_t trials = 100;
  std::uint64_t seed = 1;
  /// 0 means 2, 3, 4 and 6.
  std::uint32_t q = 0;
  std::uint32_t bound = kDefaultOrderBound;
};

struct SuiteItem {
  std::string label;
  CheckReport report;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;

  bool pass() const;
  std::size_t passed() const;
};

std::vector<std::string> suite_names();
/// InvalidInput for an unknown suite name.
SuiteReport run_suite(const std::string& suite, const SuiteConfig& config);

nlohmann::json to_json(const SuiteReport& report, const SuiteConfig& config);

}  // namespace kmforge
