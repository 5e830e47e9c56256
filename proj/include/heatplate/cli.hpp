#ifndef HEATPLATE_CLI_HPP
#define HEATPLATE_CLI_HPP

#include <iosfwd>

namespace heatplate {

inline constexpr const char* kVersion = "1.0.0";

/// Exit status of the command-line front end.
enum ExitStatus : int { kExitOk = 0, kExitDiverged = 1, kExitUsage = 2 };

/// Entry point of the `heatplate` tool. Subcommands: run, check, version.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heatplate

#endif
