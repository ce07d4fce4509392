#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coxeter {

enum class CheckOutcome { kPass, kFail, kError };

std::string to_string(CheckOutcome s);

struct CheckResult {
  std::string id;
  CheckOutcome status = CheckOutcome::kPass;
  /// Counterexample on failure; for existence checks, the object found.
  std::optional<std::string> witness;
};

/// Process exit codes of the verifier.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitPrecondition = 2,
  kExitInputError = 3,
};

struct VerificationReport {
  std::string suite;
  std::string group;
  std::map<std::string, std::string> parameters;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  double wall_time = 0.0;  // seconds

  bool passed() const;
  /// 1 if any check failed, else 2 if any errored, else 0.
  int exit_code() const;
  void sort_checks();

  /// Stable field order; equal reports serialize to equal bytes.
  std::string to_json() const;
  std::string to_table() const;
};

}  // namespace coxeter
