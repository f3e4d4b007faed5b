#pragma once

#include <stdexcept>
#include <string>

namespace spikit {

// Base class for every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Parameter-domain violations. The CLI maps these to exit code 3; plain
// input errors map to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class GammaOutOfRange : public ConfigError {
 public:
  explicit GammaOutOfRange(double gamma)
      : ConfigError("gamma " + std::to_string(gamma) +
                    " outside the supported range [0.1, 10.0]"),
        gamma_(gamma) {}
  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

class LambdaOutOfRange : public ConfigError {
 public:
  explicit LambdaOutOfRange(double lambda)
      : ConfigError("lambda " + std::to_string(lambda) +
                    " outside the supported range (0, 1]"),
        lambda_(lambda) {}
  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

// Bracketed-format parse failure.
class ParseError : public Error {
 public:
  enum class Kind {
    UnbalancedBrackets,
    EmptyNode,
    TrailingContent,
    BareLeaf,
    EmptyInput,
  };

  ParseError(Kind kind, const std::string& message, std::size_t line,
             std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        kind_(kind),
        message_(message),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Self-kernel of zero; cannot normalize. Unreachable for valid trees.
class DegenerateTree : public Error {
 public:
  DegenerateTree() : Error("tree has a zero self-kernel; cannot normalize") {}
};

class MissingSlot : public Error {
 public:
  explicit MissingSlot(const std::string& slot)
      : Error("missing or empty slot binding: " + slot), slot_(slot) {}
  const std::string& slot() const { return slot_; }

 private:
  std::string slot_;
};

class UnknownStructureType : public Error {
 public:
  explicit UnknownStructureType(const std::string& name)
      : Error("unknown structure type: " + name) {}
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error("length mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what_arg = "empty input")
      : Error(what_arg) {}
};

class ZeroVariance : public Error {
 public:
  ZeroVariance() : Error("correlation undefined: an input has zero variance") {}
};

class TooFewPoints : public Error {
 public:
  explicit TooFewPoints(std::size_t n)
      : Error("need at least 3 points, got " + std::to_string(n)) {}
};

}  // namespace spikit
