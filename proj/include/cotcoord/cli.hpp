#pragma once

// The cotcoord command line, as a library entry point so it can be tested
// without spawning processes.
//
// Exit codes: 0 success, 1 a check or suite reported failures, 2 usage error
// or invalid input, 3 internal error.

#include "cotcoord/verify.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cotcoord {

std::string_view version();

inline constexpr const char* kConfigEnvVar = "COTCOORD_CONFIG";

/// Defaults read from a config file: SuiteConfig keys plus "format".
struct CliDefaults {
  SuiteConfig suite;
  std::string format = "text";
};

/// Applies "key = value" lines to `defaults`. Blank lines and lines starting
/// with '#' are skipped. Throws std::invalid_argument naming the line on error.
void apply_config(std::istream& in, CliDefaults& defaults);

/// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cotcoord
