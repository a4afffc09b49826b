#pragma once

#include <stdexcept>
#include <string>

namespace szego {

enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  domain = 3,
  convergence = 4,
  internal = 5,
};

// Single exception type for the library; the code maps 1:1 onto the C API
// status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace szego
