#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace pcm::cli {

/// Runs one invocation (args excludes the program name). JSON goes to out
/// (or to --out), the one-line human summary and diagnostics go to err.
/// Returns 0 on success, 2 on invalid input, 1 on precision exhaustion.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Replays the worked examples and the counting grid; result["passed"] is
/// true when every check holds.
nlohmann::json selftest(long precision);

/// Default working precision: PCM_PRECISION when set, else 32.
long default_precision();

}  // namespace pcm::cli
