#pragma once

#include <stdexcept>
#include <string>

namespace rnc {

// Error categories; they map onto the CLI exit codes (input -> 2, check -> 3).
class Error : public std::runtime_error {
 public:
  enum class Kind { Input, Check, Internal };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void throw_input(const std::string& msg) {
  throw Error(Error::Kind::Input, msg);
}
[[noreturn]] inline void throw_check(const std::string& msg) {
  throw Error(Error::Kind::Check, msg);
}
[[noreturn]] inline void throw_internal(const std::string& msg) {
  throw Error(Error::Kind::Internal, msg);
}

inline void require_input(bool ok, const std::string& msg) {
  if (!ok) throw_input(msg);
}
inline void require_check(bool ok, const std::string& msg) {
  if (!ok) throw_check(msg);
}
// Internal consistency assertions: a failure signals an arithmetic bug, not bad input.
inline void require_internal(bool ok, const std::string& msg) {
  if (!ok) throw_internal(msg);
}

}  // namespace rnc
