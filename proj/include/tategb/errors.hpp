#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tategb {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid ring parameters: composite p, p^N too wide, bad variable names.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Exact division whose divisor has a larger valuation than the dividend.
class ValuationError : public Error {
 public:
  using Error::Error;
};

/// Division by a coefficient that is zero modulo p^N.
class ZeroDivisorError : public Error {
 public:
  using Error::Error;
};

/// Leading term (or normalization) requested on the zero series.
class ZeroSeriesError : public Error {
 public:
  using Error::Error;
};

/// Monomial quotient whose divisor does not divide the dividend.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// Parameters rejected by a system generator (p in {2,3}, even ell, ...).
class BadParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed series or system text. Line and column are 1-based; line is 0
/// when the text did not come from a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string out;
    if (line != 0) out += "line " + std::to_string(line) + ", ";
    out += "column " + std::to_string(column) + ": " + what;
    return out;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Malformed or invalid system-file header.
class HeaderError : public Error {
 public:
  using Error::Error;
};

}  // namespace tategb
