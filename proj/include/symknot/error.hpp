#pragma once

#include <stdexcept>
#include <string>

namespace symknot {

enum class ErrorKind {
  VariableMismatch,
  InvalidArgument,
  MalformedSyntax,
  ArcMultiplicity,
  Orientation,
  SplitDiagram,
  NotAKnot,
  ResourceLimit,
  Precondition,
  Integrity,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Input errors that the CLI reports with exit code 2.
inline bool is_input_error(ErrorKind k) {
  return k != ErrorKind::ResourceLimit && k != ErrorKind::Integrity;
}

}  // namespace symknot
