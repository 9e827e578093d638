#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invseq {

enum class ErrorKind {
  OutOfRange,
  ResourceLimit,
  ParseError,
  NotInClass,
  NotMovable,
  NotSymmetric,
  NoPreimage,
  NotInvariant,
  UnknownCheck,
  MismatchAt,
  InvalidArgument,
  InternalInvariant,
};

const char* to_string(ErrorKind kind) noexcept;

// Base for every error the library raises. The kind is what the CLI maps
// onto exit codes and JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class OutOfRangeError : public Error {
 public:
  OutOfRangeError(std::size_t position, long long value, long long bound);

  std::size_t position() const noexcept { return position_; }  // 1-based
  long long value() const noexcept { return value_; }
  long long bound() const noexcept { return bound_; }

 private:
  std::size_t position_;
  long long value_;
  long long bound_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& token,
             const std::string& message);

  std::size_t position() const noexcept { return position_; }  // 0-based offset
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

class ResourceLimitError : public Error {
 public:
  ResourceLimitError(int requested, int limit);

  int requested() const noexcept { return requested_; }
  int limit() const noexcept { return limit_; }

 private:
  int requested_;
  int limit_;
};

class MismatchError : public Error {
 public:
  MismatchError(int n, const std::string& expected, const std::string& got);

  int n() const noexcept { return n_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& got() const noexcept { return got_; }

 private:
  int n_;
  std::string expected_;
  std::string got_;
};

}  // namespace invseq
