#ifndef THETA_CLI_CLI_HPP
#define THETA_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace theta::cli {

enum ExitCode : int { ok = 0, invalid_input = 1, property_failure = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta::cli

#endif  // THETA_CLI_CLI_HPP
