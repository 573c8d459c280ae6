#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ogc/homology.hpp"

namespace ogc {

/// Parameters shared by every verification suite. Defaults reproduce the
/// acceptance ranges.
struct SuiteConfig {
  std::vector<int> ds{2, 3};
  int max_v = 5;           // full slices for d2zero and involution
  int max_e = 7;           // full slices for every suite that reads them
  int oracle_max_v = 4;    // brute-force comparison
  int oracle_max_e = 6;
  int max_loop_order = 3;  // skeleton flavor
  int core_max_v = 4;      // proof machinery sweep
  int core_max_e = 7;
  int relabelings = 200;
  int threads = 1;
  std::uint64_t seed = 0;
  RankOptions rank;
  std::optional<std::filesystem::path> cache_dir;

  nlohmann::json to_json() const;
  /// FNV-1a-64 of the canonical JSON; embedded in every report.
  std::string hash() const;
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();

  /// Records a named assertion; a failure also appends `witness` to failures.
  void check(const std::string& name, bool ok, nlohmann::json detail = nlohmann::json::object(),
             nlohmann::json witness = nullptr);
  nlohmann::json to_json(const SuiteConfig& cfg) const;
};

/// Every suite name accepted by run_suite, in a stable order.
const std::vector<std::string>& suite_names();

/// Runs a suite. Throws std::invalid_argument for an unknown name; other
/// exceptions (resource limits) propagate.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace ogc
