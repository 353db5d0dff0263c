// cochain: run one operation on a session file.
//
//   cochain <session.json|-> <command> [args...]

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cochain/commands.hpp"

namespace {

constexpr const char* kCommandHelp = R"(commands:
  validate
  cohomology <object>
  shift <object> <n>
  cone <map>
  les <map>
  homotopic <map> <map>
  qis <map>
  flip <alpha> <beta>
  compose <roof> <roof>
  roof-equiv <roof> <roof> --witness <apex> <denom> <numer> <up> <down>
  lift <map>

exit status: 0 success/true, 1 false/none, 2 input error)";

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cochain complex calculator"};
  app.footer(kCommandHelp);
  std::string session_path;
  app.add_option("session", session_path, "Session file, or - for standard input")->required();
  // The command and its arguments (including --witness) pass through
  // untouched after the session path.
  app.prefix_command();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cochain::kExitInputError;
  }
  const std::vector<std::string> command = app.remaining();

  std::string text;
  if (!read_input(session_path, text)) {
    std::cerr << "error[io]: cannot read '" << session_path << "'\n";
    return cochain::kExitInputError;
  }
  const cochain::CommandOutcome outcome = cochain::run_cli(text, command);
  std::cout << outcome.output;
  std::cerr << outcome.diagnostics;
  return outcome.exit_code;
}
