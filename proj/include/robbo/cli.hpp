#ifndef ROBBO_CLI_HPP
#define ROBBO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace robbo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (program name excluded). Errors are reported on
/// `err` as a single JSON line {"error": ..., "kind": ...}.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace robbo::cli

#endif  // ROBBO_CLI_HPP
