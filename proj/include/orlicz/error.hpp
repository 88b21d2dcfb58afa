#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  invalid_argument = 1,
  config,
  overflow,
  out_of_bracket,
  conjugate_infinite,
  degenerate,
  indeterminate,
  not_estimable,
  condition_violated,
  tail_inconclusive,
  domain_empty,
  nonconvergent,
  io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orlicz
