#pragma once

#include <stdexcept>
#include <string>

namespace funcscan {

/// Fatal toolchain error. Per-record noise is never reported through this
/// type; it goes into skip reports instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when source text falls outside the supported grammar subset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column, std::string token)
      : Error(what + " at line " + std::to_string(line) + ", col " +
              std::to_string(column) + " near '" + token + "'"),
        line(line),
        column(column),
        token(std::move(token)) {}

  int line;
  int column;
  std::string token;
};

}  // namespace funcscan
