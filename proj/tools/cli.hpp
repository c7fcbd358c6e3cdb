#ifndef MILDCERT_TOOLS_CLI_HPP
#define MILDCERT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mildcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mildcert::cli

#endif  // MILDCERT_TOOLS_CLI_HPP
