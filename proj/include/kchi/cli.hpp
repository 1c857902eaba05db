#pragma once

// Argument parsing and dispatch for the kchi command-line tool.
//
// Exit codes: 0 success, 1 usage error, 2 domain error or unreadable input,
// 3 numeric or resource error, 4 verify found a failing check.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kchi/combinat.hpp"

namespace kchi {

enum class Command { chartable, power, deriv, norm, immanant, bound, perturb, verify };

struct RunConfig {
  Command command = Command::chartable;
  Partition chi;
  int m = 0;
  int n = 0;
  int k = 0;
  std::string input;               // matrix file for T or A
  std::vector<std::string> xs;     // direction files for deriv
  int samples = 1000;
  std::uint64_t seed = 7;
  std::optional<double> tolerance; // overrides the report tolerances
  double delta = 0.0;
  int max_n = 4;
  std::string output;              // empty means stdout
};

class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& what, std::string usage)
      : std::runtime_error(what), usage_(std::move(usage)) {}
  const std::string& usage() const { return usage_; }

 private:
  std::string usage_;
};

/// args excludes the program name. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed command and returns the exit code; diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run, with usage errors mapped to exit code 1.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kchi
