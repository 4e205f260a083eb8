#pragma once

#include <stdexcept>
#include <string>

namespace opw {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  Scope,
  NotOuterplanar,
  Precondition,
  Internal,
};

// Every failure raised by the library carries a kind so that the C surface
// can translate it into a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace opw
