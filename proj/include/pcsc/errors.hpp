#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcsc {

// Precondition or domain violation (unknown alternative, bad index, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rule was evaluated outside the profiles it is defined for (e.g. f1 with m != 3).
class ApplicabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration would exceed its configured budget.
class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class ParseErrorKind {
  BadHeader,
  BadLine,
  BadMultiplicity,
  DuplicateAlternative,
  UnknownLabel,
  MissingAlternative,
  EmptyBody,
  BadRational,
  NegativeProbability,
  BadSum,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  // 1-based; 0 when the input has no line structure.
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

}  // namespace pcsc
