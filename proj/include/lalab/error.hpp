#pragma once

#include <stdexcept>
#include <string>

namespace lalab {

enum class ErrorKind {
  InvalidParameter,
  NoSuchObject,
  ConditionViolation,
  ConstructionUnsound,
  SizeLimit,
  NotApplicable,
  Parse,
  Index,
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

}  // namespace lalab
