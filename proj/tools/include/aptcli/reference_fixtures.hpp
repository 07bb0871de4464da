#pragma once

// Reference fixtures for m = 35, 23, 974, 7 and 15, checked against the library.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace aptcli {

struct FixtureResult {
  std::string name;
  std::int64_t m = 0;
  bool pass = false;
  std::string detail;  // observed value on failure
};

/// Fixtures for one m only when `only_m` is set. Generator tables go
/// through the cache in `cache_dir` (empty disables it).
std::vector<FixtureResult> run_reference_fixtures(std::optional<std::int64_t> only_m,
                                              const std::filesystem::path& cache_dir);

}  // namespace aptcli
