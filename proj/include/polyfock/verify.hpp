#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pfx {

struct CheckResult {
  std::string id;
  bool pass = false;
  bool gating = true;  // informational checks never fail the suite
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  std::vector<CheckResult> checks;
};

struct SuiteParams {
  unsigned max_k = 8;
  unsigned max_d = 3;
  unsigned max_degree = 8;
  unsigned sample_count = 200;
  std::uint64_t seed = 20240713;
};

/// Fixed default unless the PFX_SEED environment variable overrides it.
std::uint64_t default_seed();

const std::vector<std::string>& suite_names();

/// Runs one named suite; "all" runs every suite concatenated.
/// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

}  // namespace pfx
