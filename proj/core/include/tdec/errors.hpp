#ifndef TDEC_ERRORS_HPP
#define TDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tdec {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  EdgeOutOfRange,
  ParameterTooSmall,
  ParseError,
  InvalidK,
  SizeCapExceeded,
  PathTooShort,
  CycleTooShort,
  EmptyGraph,
  LengthMismatch,
  InvalidColoring,
  InfeasibleGraph,
  UnknownSuite,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace tdec

#endif
