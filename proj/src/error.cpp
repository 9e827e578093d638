#include "invseq/error.hpp"

namespace invseq {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::NotMovable: return "NotMovable";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NoPreimage: return "NoPreimage";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::MismatchAt: return "MismatchAt";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

OutOfRangeError::OutOfRangeError(std::size_t position, long long value,
                                 long long bound)
    : Error(ErrorKind::OutOfRange,
            "entry " + std::to_string(value) + " at position " +
                std::to_string(position) + " exceeds bound " +
                std::to_string(bound)),
      position_(position),
      value_(value),
      bound_(bound) {}

ParseError::ParseError(std::size_t position, const std::string& token,
                       const std::string& message)
    : Error(ErrorKind::ParseError, "parse error at offset " +
                                       std::to_string(position) + " ('" +
                                       token + "'): " + message),
      position_(position),
      token_(token) {}

ResourceLimitError::ResourceLimitError(int requested, int limit)
    : Error(ErrorKind::ResourceLimit,
            "n = " + std::to_string(requested) +
                " exceeds the enumeration limit " + std::to_string(limit) +
                " (set INVSEQ_MAX_N to override)"),
      requested_(requested),
      limit_(limit) {}

MismatchError::MismatchError(int n, const std::string& expected, const std::string& got)
    : Error(ErrorKind::MismatchAt, "mismatch at n = " + std::to_string(n) + ": expected " +
                                       expected + ", got " + got),
      n_(n),
      expected_(expected),
      got_(got) {}

}  // namespace invseq
