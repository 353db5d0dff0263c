#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cochain/session.hpp"

namespace cochain {

// Exit codes of the command line tool.
enum ExitCode : int {
  kExitTrue = 0,       // success, or a "true" verdict
  kExitFalse = 1,      // well-formed "false" / "none" verdict
  kExitInputError = 2  // bad input: syntax, names, shapes, preconditions
};

struct CommandOutcome {
  int exit_code = kExitTrue;
  std::string output;       // for stdout
  std::string diagnostics;  // for stderr
};

// Runs one command against a parsed session. args[0] is the command name:
//
//   validate
//   cohomology <object>
//   shift <object> <n>
//   cone <map>
//   les <map>
//   homotopic <map> <map>
//   qis <map>
//   flip <alpha> <beta>
//   compose <roof> <roof>
//   roof-equiv <roof> <roof> --witness <apex> <denom> <numer> <up> <down>
//   lift <map>
//
// Verdict commands print a JSON report. Constructive commands (shift, cone,
// flip, compose, lift) print the input session extended by the new
// entities, which parses back as a session.
CommandOutcome run_command(const Session& session, const std::vector<std::string>& args);

// parse_session followed by run_command; every input error maps to exit 2.
CommandOutcome run_cli(std::string_view session_text, const std::vector<std::string>& args);

}  // namespace cochain
