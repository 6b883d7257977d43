#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sphd {

/// Library error with a stable machine-readable code, e.g. "EdgeCountMismatch".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace sphd
