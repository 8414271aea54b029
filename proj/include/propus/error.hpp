#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace propus {

enum class Errc {
  InvalidModulus,
  NonUnitGenerator,
  NonUnit,
  EvenModulus,
  InvalidArgument,
  NotARepresentative,
  NotInvariant,
  ZeroShift,
  NoValidArrangement,
  DimensionMismatch,
  InfeasibleParams,
  SyntaxError,
  SubgroupNotClosed,
  BlockSizeMismatch,
  SchemaError,
  IoError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Syntax error in the family text notation; line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error(Errc::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace propus
