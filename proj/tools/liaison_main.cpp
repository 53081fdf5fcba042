#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liaison/commands.hpp"
#include "liaison/errors.hpp"
#include "liaison/session.hpp"

namespace {

bool parse_window(const std::string& spec, liaison::Window& w) {
  int lo = 0, hi = 0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%d..%d%c", &lo, &hi, &tail) != 2)
    return false;
  w = {lo, hi};
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "liaison: deficiency modules, canonical duality, and Gorenstein "
      "liaison checks for homogeneous ideals over a prime field"};

  std::string session_path;
  std::string window_spec = "-12..12";
  std::string out_path;
  liaison::CommandOptions opts;
  std::vector<std::string> command;

  app.add_option("session", session_path, "session file (ring/ideal/link)")
      ->required();
  std::string command_help = "command and its arguments; one of:";
  for (const std::string& c : liaison::command_names())
    command_help += " " + c;
  app.add_option("command", command, command_help)->required()->expected(-1);
  app.add_option("--window", window_spec,
                 "inclusive degree window `lo..hi` (default -12..12)");
  app.add_flag("--oracle", opts.oracle,
               "cross-check Hilbert data against the dense oracle");
  app.add_flag("--certify", opts.certify,
               "upgrade liaison identities to isomorphism certificates");
  app.add_option("--max-degree", opts.max_degree,
                 "degree cap for oracle and certificate work (default 12)");
  app.add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (!parse_window(window_spec, opts.window)) {
    std::fprintf(stderr, "error: --window expects `lo..hi`, got `%s`\n",
                 window_spec.c_str());
    return 1;
  }

  liaison::SessionFile session;
  try {
    session = liaison::parse_session(session_path);
  } catch (const liaison::LiaisonError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  const liaison::CommandResult result =
      liaison::run_command(session, command, opts);

  if (out_path.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
      return 1;
    }
    out << result.report;
  }
  return result.exit_code;
}
