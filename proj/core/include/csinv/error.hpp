#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csinv {

enum class ErrorKind {
  IncomparableValues,
  UnsupportedParameter,
  InvalidInput,
  SizeLimit,
  RankLimit,
  MalformedSplit,
  OutOfRange,
  NoRewrite,
  SignUnknown,
  ParseError,
  UnknownBlock,
  ArityError,
  CatalogError,
};

const char* to_string(ErrorKind kind);

/// Base exception for every recoverable failure raised by the engine.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the expression parser; carries the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace csinv
