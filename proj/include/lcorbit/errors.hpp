#pragma once

#include <stdexcept>
#include <string>

namespace lcorbit {

// Malformed textual input (ANF, graph6, generator matrix, spec files).
// line/column are 1-based when known, -1 otherwise.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, int line = -1, int column = -1)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line < 0) return msg;
    std::string s = msg + " (line " + std::to_string(line);
    if (column >= 0) s += ", column " + std::to_string(column);
    return s + ")";
  }
  int line_;
  int column_;
};

// A computation was refused because it exceeds the default size budget.
// The message names the flag that lifts the restriction.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural invariant that should hold by construction was violated.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lcorbit
