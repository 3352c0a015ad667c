#ifndef PROJLIN_CLI_HPP_
#define PROJLIN_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace projlin {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitSelfcheckFailed = 4;

// Runs one subcommand. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projlin

#endif  // PROJLIN_CLI_HPP_
