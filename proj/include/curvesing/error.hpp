#pragma once

#include <stdexcept>
#include <string>

namespace curvesing {

enum class ErrorKind {
  Input,      // malformed or unsupported input
  Degenerate, // input violates a mathematical precondition (gcd, birationality)
  Invariant,  // an internal identity failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

[[noreturn]] inline void fail(ErrorKind kind, const char* module, const std::string& what) {
  throw Error(kind, module, what);
}

inline void require(bool cond, ErrorKind kind, const char* module, const std::string& what) {
  if (!cond) fail(kind, module, what);
}

}  // namespace curvesing
