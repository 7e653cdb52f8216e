#ifndef TYPERANK_CLI_HPP
#define TYPERANK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace typerank {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // bad arguments, unparsable type/ordinal/term
  kExitRefused = 2,       // no retraction/isomorphism exists, or a > b
  kExitVerifyFailed = 3,  // a witness failed verification
};

/// Runs one invocation. `args` excludes the program name.
///
///   rank T | canon T [--witness] | compare A B | derive a b
///   retract A B [--no-verify] [--samples N] [--seed S] | iso A B
///   verify A B ENC_FILE DEC_FILE [--samples N] [--seed S]
///
/// Every command accepts --json.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace typerank

#endif  // TYPERANK_CLI_HPP
