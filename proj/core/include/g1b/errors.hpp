#pragma once
// Error taxonomy.  Usage errors are the caller's problem (CLI maps them to
// exit code 1).  PreconditionError and subclasses signal violated mathematical
// preconditions; the CLI maps them to exit code 2 with a machine-readable
// reason.  InternalError marks broken internal invariants (never expected).

#include <stdexcept>
#include <string>

namespace g1b {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionError : public Error {
 public:
  PreconditionError(std::string reason_code, const std::string& what)
      : Error(what), reason_(std::move(reason_code)) {}
  // Stable machine-readable identifier, e.g. "full_torsion_absent".
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class FullTorsionAbsent : public PreconditionError {
 public:
  FullTorsionAbsent(unsigned long long q, unsigned long long n)
      : PreconditionError("full_torsion_absent",
                          "E[n] is not fully rational over F_q (q=" + std::to_string(q) +
                              ", n=" + std::to_string(n) + ")") {}
};

class UnsupportedPolicy : public PreconditionError {
 public:
  explicit UnsupportedPolicy(const std::string& what)
      : PreconditionError("unsupported_policy", what) {}
};

class BudgetExceeded : public PreconditionError {
 public:
  explicit BudgetExceeded(const std::string& what)
      : PreconditionError("budget_exceeded", what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace g1b
