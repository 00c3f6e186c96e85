#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "semikern/commands.hpp"
#include "semikern/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "semikern: kernels, cokernels, canonical factorizations and isomorphism\n"
      "theorems over finite linear-algebra categories"};

  std::string command;
  std::vector<std::string> args;
  std::string input;
  semikern::CommandOptions opt;

  app.add_option("command", command,
                 "analyze | kernel | cokernel | factor | meet | join | iso2 | iso3 | "
                 "refine | hom | check-axioms | mine")
      ->required();
  app.add_option("args", args, "command arguments (object / morphism / pattern names)");
  app.add_option("--input", input, "session file");
  app.add_option("--seed", opt.seed, "random seed (default 0)");
  app.add_option("--samples", opt.samples, "sample / budget count (default 200)");
  app.add_option("--max-dim", opt.max_dim, "size bound for sampled objects (default 2)");
  app.add_option("--p", opt.p, "prime for sessions that do not declare one");
  app.add_flag("--json", opt.json, "machine-readable report");
  app.add_flag("--paranoid", opt.paranoid, "add random probe objects to the checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  semikern::Session session;
  if (!input.empty()) {
    try {
      session = semikern::Session::parse_file(input);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  semikern::CommandResult result = semikern::run_command(command, args, session, opt);
  std::cout << result.output;
  return result.exit_code;
}
