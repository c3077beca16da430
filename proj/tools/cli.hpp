#pragma once

#include <string>
#include <vector>

namespace ua::cli {

// Exit codes: 0 success, 1 a verification check computed false, 2 usage or
// input error, 3 capacity cap exceeded.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kSchemaVersion = 1;

// args[0] is the program name.
CommandResult run(std::vector<std::string> const& args);

}  // namespace ua::cli
