#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcfrac {

/// Location and description of a syntax error in expression text.
struct ParseDiagnostic {
  std::size_t offset = 0;   // byte offset into the source, <= source length
  std::string message;
  std::string expected;     // hint, may be empty
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseDiagnostic diag, std::string source);

  const ParseDiagnostic& diagnostic() const noexcept { return diag_; }
  const std::string& source() const noexcept { return source_; }

  /// Two-line rendering: the source and a caret under the offending byte.
  std::string render() const;

 private:
  ParseDiagnostic diag_;
  std::string source_;
};

/// Evaluation outside the real domain of an expression (ln of a nonpositive
/// value, division by zero, overflow, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The kernel violates k > 0 or |k'| >= floor at the requested point.
class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem hypothesis does not hold for the supplied inputs.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid numeric configuration or order.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gcfrac
