#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace tropnewton {

struct CommandOptions {
  std::string command;  // zerodim, point, link, newton, triangulate, groebner, verify
  std::string ideal_text;
  std::uint64_t seed = 0;
  long max_attempts = 20;
  long precision_cap = 64;
  bool pure_powers = false;
  bool precondition = false;
  bool paper_exact = false;
  bool trace = false;
  bool timing = false;
  bool quiet = false;  // stderr diagnostics at warning level and above only
  unsigned jobs = 1;
  long unit_bound = 100;
  /// Comma-separated rationals, or the name of a weight declared in the file.
  std::optional<std::string> weight;
  /// Comma-separated scalars for the independent variables (point).
  std::optional<std::string> substitute;
  std::string order = "degrevlex";  // groebner: lex, degrevlex or weighted
  std::optional<std::string> var;   // newton: variable name, default the last
};

enum class Status { Ok, VerificationFailed, ResourceLimit, InputError };

/// 0, 2, 3 and 1 respectively.
int exit_code(Status status);

struct CommandResult {
  Status status;
  std::string json;  // the result document, pretty-printed
  std::string text;  // human-readable summary
};

/// Runs one command. Library errors become a document with status
/// "input_error" or "resource_limit"; nothing is thrown.
CommandResult dispatch(const CommandOptions& opts);

}  // namespace tropnewton
