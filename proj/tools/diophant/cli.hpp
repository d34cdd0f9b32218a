#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diophant::cli {

/// Exit codes: 0 success, 1 validation or domain error, 2 parse error,
/// 3 internal inconsistency (including selfcheck failures).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diophant::cli
