#pragma once

// Error taxonomy for the runtime. Everything thrown by the library derives
// from graphlog::Error so callers can catch the whole family at once; the
// CLI maps the concrete types onto stable exit codes.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphlog {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- canonical serialization ------------------------------------------------

class NonCanonicalizableError : public Error {
 public:
  using Error::Error;
};

// -- event log ----------------------------------------------------------------

class LogSealedError : public Error {
 public:
  using Error::Error;
};

class DanglingCauseError : public Error {
 public:
  using Error::Error;
};

class UnknownEventTypeError : public Error {
 public:
  using Error::Error;
};

class MalformedLogError : public Error {
 public:
  MalformedLogError(std::size_t line, const std::string& msg)
      : Error("malformed log at line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class VersionMismatchError : public Error {
 public:
  using Error::Error;
};

// -- graph projection ---------------------------------------------------------

class DanglingReferenceError : public Error {
 public:
  using Error::Error;
};

class UnknownObjectTypeError : public Error {
 public:
  using Error::Error;
};

class PatchTargetMissingError : public Error {
 public:
  using Error::Error;
};

// -- pattern language ----------------------------------------------------------

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error("parse error at offset " + std::to_string(offset) + ": expected " +
              expected),
        offset_(offset),
        expected_(expected) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

// -- behavior runtime ----------------------------------------------------------

class DuplicateBehaviorNameError : public Error {
 public:
  using Error::Error;
};

class InvalidSubscriptionError : public Error {
 public:
  using Error::Error;
};

class ContextEscapedError : public Error {
 public:
  using Error::Error;
};

// Thrown inside a fire when a budget dimension trips. The runtime has already
// appended budget.exceeded and sealed the run by the time this unwinds.
class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& dimension)
      : Error("budget exceeded: " + dimension), dimension_(dimension) {}
  const std::string& dimension() const { return dimension_; }

 private:
  std::string dimension_;
};

// -- effects cache ----------------------------------------------------------

class UnknownToolError : public Error {
 public:
  using Error::Error;
};

// A transport/provider failure on a live call; recorded as llm.failed.
class ProviderError : public Error {
 public:
  using Error::Error;
};

// A tool body failure on a live call; recorded as tool.failed.
class ToolError : public Error {
 public:
  using Error::Error;
};

// The fixture set has no response for a request the pack issued. This is a
// configuration defect, not a recordable failure: it aborts the run.
class FixtureMissError : public Error {
 public:
  using Error::Error;
};

// -- replay / fork ----------------------------------------------------------

class MissingBehaviorError : public Error {
 public:
  using Error::Error;
};

class CutoffOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class UnrelatedRunsError : public Error {
 public:
  using Error::Error;
};

class UnknownTargetError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphlog
