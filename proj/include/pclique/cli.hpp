#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pclique {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;   // bad flags, unreadable or malformed files
inline constexpr int kExitDomain = 2;  // parameters outside the model, k > N

// Runs one invocation. args excludes the program name. Errors are reported
// on err as a single line "error[<code>]: <message>".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pclique
