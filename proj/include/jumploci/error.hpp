#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace jumploci {

/// Error with a stable machine-readable code ("NotAFace", "VoidComplex", ...).
/// The CLI maps any Error to exit code 2 and echoes the code in the report.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& what) {
  throw Error(std::move(code), what);
}

}  // namespace jumploci
