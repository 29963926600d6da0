#include "satis/error.hpp"

namespace satis {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::UnknownPrefix: return "unknown prefix";
    case ErrorKind::VariableInData: return "variable in data";
    case ErrorKind::TypeMismatch: return "type mismatch";
    case ErrorKind::UnboundFilterVariable: return "unbound filter variable";
    case ErrorKind::CyclicMap: return "cyclic map";
    case ErrorKind::DuplicateId: return "duplicate id";
    case ErrorKind::InvalidSignature: return "invalid signature";
    case ErrorKind::UnknownConcept: return "unknown concept";
    case ErrorKind::EmptyProfile: return "empty profile";
    case ErrorKind::NotFound: return "not found";
    case ErrorKind::MalformedSection: return "malformed section";
    case ErrorKind::InvalidGoal: return "invalid goal";
    case ErrorKind::Io: return "io error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, int line, int column)
    : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

}  // namespace satis
