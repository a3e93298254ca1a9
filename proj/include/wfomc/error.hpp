#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wfomc {

/// Malformed input text (formulas, signatures, constraints, axioms, MLN files).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// Well-formed input outside the liftable fragment the engine supports.
class UnsupportedFragment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force oracle refused an instance above its ground-atom cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A probability was requested from a model with no worlds.
class ZeroPartition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation ran past its wall-clock budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wfomc
