#pragma once

// Quick cross-module invariant suite, sized to finish well under a minute.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace diophant {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;
};

struct SelfcheckReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  /// module -> (checks passed, checks run).
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_module() const;
};

SelfcheckReport run_selfcheck(std::uint64_t seed = 1);

}  // namespace diophant
