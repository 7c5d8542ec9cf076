#pragma once

#include "ymheat/yangmills.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ymheat::cli {

enum class Command { wilson_exp, wilson_var, sphere, plane, zfun, limits, sweep, verify };
enum class Format { csv, json };

struct RunConfig {
  Command command = Command::verify;
  GroupKind group = GroupKind::unitary;
  SurfaceSpec surface;
  std::vector<int> ranks;
  TruncationPolicy policy;
  Format format = Format::csv;
  std::optional<std::string> output_path;
  unsigned workers = 1;
  bool timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* command_name(Command c);

/// Arguments exclude the program name. Precedence: defaults, then --config file, then flags.
RunConfig parse_args(const std::vector<std::string>& args);
RunConfig parse_args(int argc, const char* const* argv);

/// Writes the result table to `out`; diagnostics go to `err`. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, write to --out or `out`. Returns 0, 1 or 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ymheat::cli
