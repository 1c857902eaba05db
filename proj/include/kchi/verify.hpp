#pragma once

// Acceptance suite: every check compares a computed value against an
// independent route or a closed form and records both.

#include <cstdint>
#include <string>
#include <vector>

#include "kchi/json_io.hpp"

namespace kchi {

struct Check {
  std::string name;
  Json parameters = Json::object();
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  std::string relation;  // how observed is compared against expected
  bool pass = false;
  /// Deterministic counterexample to a stated bound; see Criterion::note.
  bool witness = false;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  std::string note;

  bool skipped() const { return checks.empty(); }
  bool pass() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  int max_n = 4;
  std::uint64_t seed = 7;
};

/// Runs all ten criteria, restricted to n <= max_n (2 <= max_n <= 4).
std::vector<Criterion> run_acceptance(const VerifyOptions& options);

Json verify_report(const VerifyOptions& options, const std::vector<Criterion>& criteria);

/// True when every failing check is a witness and each witness fails exactly
/// when its character has degree above one.
bool failures_are_documented(const std::vector<Criterion>& criteria);

}  // namespace kchi
