#pragma once

#include <string>
#include <vector>

namespace ordcopies::cli {

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 domain error, 2 parse or usage error
  std::string out;
  std::string err;
};

// argv excludes the program name.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace ordcopies::cli
