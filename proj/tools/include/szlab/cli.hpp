#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "szlab/bd_space.hpp"
#include "szlab/step_function.hpp"

namespace szlab::cli {

enum class Format { kTable, kJson };

enum class Command { kOrdinal, kArea, kMeasure, kBd, kTree, kVerifyAll };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  Command command = Command::kVerifyAll;
  // Subcommand of ordinal / bd / tree: "add", "dims", "value", ...
  std::string action;
  std::vector<std::string> operands;
  std::string input;
  std::string epsilon;
  bool trace = false;
  std::optional<std::size_t> oracle_depth;
  std::string params = "1/2,1/4,2";
  std::size_t max_level = 4;
  std::size_t from = 1;
  std::size_t to = 2;
  std::size_t k = 1;
  std::string node;
  std::size_t s = 1;
  Format format = Format::kTable;
  std::size_t level_cap = kDefaultLevelCap;
};

struct RunResult {
  int status = kExitOk;
  std::string out;
  std::string err;
};

RunResult run(const RunConfig& config);

// Parses the arguments (without the program name) and runs them. --help output
// goes to `out` with status 0; usage errors exit 2.
RunResult run_command_line(const std::vector<std::string>& args, std::size_t level_cap = kDefaultLevelCap);

// "(w+1)*1_{(0,1/4]} + 1_{(1/4,3/4]}", or "0".
std::string format_step_function(const StepFunction& f);

// One line "h_i = ..." per distinct stage of the accumulated compression chain, or
// "C = 0" when nothing was compressed. The JSON form carries the same lines.
std::string emit_trace(const CompressionTrace& trace, Format format);

}  // namespace szlab::cli
