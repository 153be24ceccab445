#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rigisoc {

// Every validation failure carries a stable machine-readable code plus a
// human-readable detail string.  The CLI maps these to exit code 2 with
// {"error": code, "detail": ...} on stderr.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)),
        detail_(detail) {}

  const std::string &code() const noexcept { return code_; }
  const std::string &detail() const noexcept { return detail_; }

private:
  std::string code_;
  std::string detail_;
};

[[noreturn]] inline void fail(const std::string &code,
                              const std::string &detail) {
  throw Error(code, detail);
}

} // namespace rigisoc
