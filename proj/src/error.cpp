#include "orlicz/error.hpp"

#include <charconv>

#include "orlicz/extended.hpp"

namespace orlicz {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::config: return "invalid configuration";
    case ErrorCode::overflow: return "value exceeds representable range";
    case ErrorCode::out_of_bracket: return "inverse out of bracket";
    case ErrorCode::conjugate_infinite: return "conjugate infinite";
    case ErrorCode::degenerate: return "degenerate input";
    case ErrorCode::indeterminate: return "indeterminate";
    case ErrorCode::not_estimable: return "not estimable";
    case ErrorCode::condition_violated: return "growth condition violated";
    case ErrorCode::tail_inconclusive: return "tail inconclusive";
    case ErrorCode::domain_empty: return "domain vanishes at this resolution";
    case ErrorCode::nonconvergent: return "nonconvergent";
    case ErrorCode::io: return "i/o error";
  }
  return "unknown error";
}

std::string to_string(const ExtendedReal& x) {
  if (x.is_infinite()) return "inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x.value());
  (void)ec;
  return std::string(buf, end);
}

}  // namespace orlicz
