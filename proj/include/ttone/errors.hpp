#pragma once

#include <stdexcept>
#include <string>

namespace ttone {

// Broad failure classes; the CLI maps these onto exit codes 1/2/3.
enum class ErrorKind {
  invalid_input,     // malformed graph, labeling, parameters
  precondition,      // well-formed input outside an operation's domain
  budget_exhausted,  // deterministic search budget ran out
  internal,          // a guaranteed construction failed: implementation bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  // Short machine-readable tag such as "edge-crossing" or "degree-two-vertex".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& code, const std::string& message);

}  // namespace ttone
