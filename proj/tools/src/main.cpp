#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "szlab/cli.hpp"

int main(int argc, char** argv) {
  std::size_t level_cap = szlab::kDefaultLevelCap;
  if (const char* raw = std::getenv("SZLAB_LEVEL_CAP")) {
    try {
      level_cap = std::stoul(raw);
    } catch (const std::exception&) {
      std::cerr << "error: PARSE_ERROR: SZLAB_LEVEL_CAP must be a positive integer\n";
      return szlab::cli::kExitInputError;
    }
    if (level_cap > szlab::kDefaultLevelCap) {
      std::cerr << "warning: level cap raised to " << level_cap
                << "; level 6 has about 1.9e8 coordinates and dense embeddings need far more memory than most hosts have\n";
    }
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  szlab::cli::RunResult result = szlab::cli::run_command_line(args, level_cap);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
