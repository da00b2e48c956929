// Command-line front end. Runs one command given on the command line, or a
// script read from stdin (one command per line; blank lines and '#' comments
// are skipped).

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monideal/cli/commands.hpp"

namespace {

using monideal::cli::json;

int report(const monideal::cli::CommandError& e, bool as_json, std::size_t line_no) {
  json rec = e.record();
  if (line_no) rec["error"]["line"] = line_no;
  if (as_json) std::cout << rec.dump() << '\n';
  std::cerr << rec.dump() << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with complete monomial ideals"};
  std::size_t dim = 3;
  std::vector<std::string> var_names;
  bool as_json = false;
  bool verify = false;
  std::size_t max_depth = monideal::kDefaultMaxDepth;
  std::vector<std::string> words;
  app.add_option("--dim", dim, "number of variables (default 3)")->check(CLI::Range(2, 64));
  app.add_option("--vars", var_names, "variable names, comma separated")->delimiter(',');
  app.add_flag("--json", as_json, "print one JSON record per command");
  app.add_option("--max-depth", max_depth, "base-point tree depth limit");
  app.add_flag("--verify", verify, "cross-check CIT and closure with independent routes");
  app.add_option("command", words, "command and arguments; read a script from stdin when omitted");
  app.allow_extras(false);
  app.prefix_command(false);
  CLI11_PARSE(app, argc, argv);

  monideal::cli::Workspace ws;
  try {
    monideal::cli::VariableNames vars =
        var_names.empty() ? monideal::cli::VariableNames(dim) : monideal::cli::VariableNames(var_names);
    if (!var_names.empty() && app.count("--dim") && vars.dim() != dim)
      throw monideal::Error(monideal::ErrorKind::DimensionMismatch, "vars", "--vars does not list --dim names");
    monideal::cli::SessionOptions opt;
    opt.max_depth = max_depth;
    opt.verify = verify;
    ws = monideal::cli::Workspace(std::move(vars), opt);
  } catch (const monideal::Error& e) {
    return report(monideal::cli::CommandError(e, "startup", {}), as_json, 0);
  }

  auto run = [&](const std::string& line, std::size_t line_no) {
    try {
      auto out = monideal::cli::run_command(ws, line);
      std::cout << (as_json ? out.record.dump() : out.text) << '\n';
      return 0;
    } catch (const monideal::cli::CommandError& e) {
      return report(e, as_json, line_no);
    } catch (const std::exception& e) {
      return report(monideal::cli::CommandError(
                        monideal::Error(monideal::ErrorKind::Overflow, "run_command", e.what()), line, {}),
                    as_json, line_no);
    }
  };

  if (!words.empty()) {
    std::string line;
    for (const auto& w : words) line += (line.empty() ? "" : " ") + w;
    return run(line, 0);
  }
  std::string line;
  std::size_t n = 0;
  while (std::getline(std::cin, line)) {
    ++n;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    if (int rc = run(line, n)) return rc;
  }
  return 0;
}
