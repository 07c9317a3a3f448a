#pragma once

#include <stdexcept>
#include <string>

namespace utp {

struct VariableSetMismatch : std::runtime_error {
  explicit VariableSetMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct OutOfDomain : std::runtime_error {
  explicit OutOfDomain(const std::string& m) : std::runtime_error(m) {}
};

struct AlphabetMismatch : std::runtime_error {
  explicit AlphabetMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct UnknownVariable : std::runtime_error {
  explicit UnknownVariable(const std::string& m) : std::runtime_error(m) {}
};

struct ConditionMentionsAfterVars : std::runtime_error {
  explicit ConditionMentionsAfterVars(const std::string& m) : std::runtime_error(m) {}
};

struct DomainViolation : std::runtime_error {
  explicit DomainViolation(const std::string& m) : std::runtime_error(m) {}
};

struct NonMonotoneDetected : std::runtime_error {
  explicit NonMonotoneDetected(const std::string& m) : std::runtime_error(m) {}
};

struct NotReactiveAlphabet : std::runtime_error {
  explicit NotReactiveAlphabet(const std::string& m) : std::runtime_error(m) {}
};

struct UnhealthyMember : std::runtime_error {
  explicit UnhealthyMember(const std::string& m) : std::runtime_error(m) {}
};

struct EmptySet : std::runtime_error {
  explicit EmptySet(const std::string& m) : std::runtime_error(m) {}
};

struct ScopeError : std::runtime_error {
  explicit ScopeError(const std::string& m) : std::runtime_error(m) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& expected, const std::string& got)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": expected " + expected +
                           ", got " + got),
        line(line), col(col), expected(expected), got(got) {}
  int line;
  int col;
  std::string expected;
  std::string got;
};

}  // namespace utp
