#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkm {

// Malformed or out-of-contract input (bad file, rank mismatch, unknown name).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but cannot be the data of a genuine GKM action,
// e.g. a localization sum that fails to cancel to a constant.
class InconsistentDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace gkm
