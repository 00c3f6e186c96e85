#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semikern/session.hpp"

namespace semikern {

struct CommandOptions {
  std::uint64_t seed = 0;
  int samples = 200;
  int max_dim = 2;
  long long p = 2;
  bool json = false;
  bool paranoid = false;
};

// exit codes: 0 success/verified, 1 verification failure, 2 usage/parse error
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

CommandResult run_command(const std::string& command, const std::vector<std::string>& args,
                          const Session& session, const CommandOptions& opt);

}  // namespace semikern
