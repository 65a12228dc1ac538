#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cygoppa {

/// Library-wide exception. `kind()` is a stable machine-readable tag that the
/// CLI maps to exit codes and JSON `error.kind` fields.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

/// Kinds that signal a violated standing assumption rather than bad input:
/// the construction is skipped, not rejected (CLI exit code 3).
inline bool is_skip_kind(std::string_view kind) {
  return kind == "order_two" || kind == "c_zero" || kind == "no_affine_orbit" ||
         kind == "frobenius_exploratory";
}

}  // namespace cygoppa
