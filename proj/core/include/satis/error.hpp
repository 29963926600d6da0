#pragma once

#include <stdexcept>
#include <string>

namespace satis {

enum class ErrorKind {
  Syntax,
  UnknownPrefix,
  VariableInData,
  TypeMismatch,
  UnboundFilterVariable,
  CyclicMap,
  DuplicateId,
  InvalidSignature,
  UnknownConcept,
  EmptyProfile,
  NotFound,
  MalformedSection,
  InvalidGoal,
  Io,
};

const char* to_string(ErrorKind kind);

/// Error with a kind discriminator. Parse errors carry a 1-based line and
/// column; both are 0 for non-positional errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, int line, int column);

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace satis
