#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nilgeo {

/// Library error with a stable machine-readable code and a human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Parse error carrying the source position (1-based).
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("SYNTAX", "line " + std::to_string(line) + ", col " +
                            std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace nilgeo
