#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace galkit {

using BigInt = boost::multiprecision::cpp_int;

enum class ErrorCode {
  invalid_argument = 1,
  parse_error = 2,
  degree_mismatch = 3,
  budget_exceeded = 4,
  precondition = 5,
  internal = 6,
};

/// Every failure raised by the library carries one of the codes above; the C
/// API maps them one-to-one onto `galkit_status`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

inline std::string to_string(const BigInt &n) { return n.str(); }

}  // namespace galkit
