#pragma once

#include <string>
#include <vector>

namespace pkpm {

/// Command-line entry point. Exit codes: 0 success, 1 runtime failure,
/// 2 usage error.
int cli_main(int argc, const char* const* argv);

/// Convenience overload for in-process invocation (tests); the program name
/// is prepended automatically.
int cli_main(const std::vector<std::string>& args);

}  // namespace pkpm
