#pragma once

#include <stdexcept>
#include <string>

namespace bethforge {

// All recoverable failures are exceptions rooted here; callers that want
// verdicts instead of throws (validate_frame, classify, ...) return data.
struct ForgeError : std::runtime_error {
  explicit ForgeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SyntaxError : ForgeError {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& msg)
      : ForgeError("syntax error at " + std::to_string(pos) + ": " + msg), position(pos) {}
};

struct SortError : ForgeError {
  explicit SortError(const std::string& msg) : ForgeError("sort error: " + msg) {}
};

struct LanguageError : ForgeError {
  explicit LanguageError(const std::string& msg) : ForgeError("language error: " + msg) {}
};

struct DecodeError : ForgeError {
  explicit DecodeError(const std::string& msg) : ForgeError("decode error: " + msg) {}
};

struct RuleError : ForgeError {
  explicit RuleError(const std::string& msg) : ForgeError("rule error: " + msg) {}
};

struct EigenvariableError : RuleError {
  explicit EigenvariableError(const std::string& msg) : RuleError("eigenvariable: " + msg) {}
};

struct AxiomError : ForgeError {
  explicit AxiomError(const std::string& msg) : ForgeError("axiom error: " + msg) {}
};

struct SideConditionError : ForgeError {
  explicit SideConditionError(const std::string& msg) : ForgeError("side condition: " + msg) {}
};

struct DomainError : ForgeError {
  explicit DomainError(const std::string& msg) : ForgeError("domain error: " + msg) {}
};

struct UnsupportedError : ForgeError {
  explicit UnsupportedError(const std::string& msg) : ForgeError("unsupported: " + msg) {}
};

struct BlowupError : ForgeError {
  explicit BlowupError(const std::string& msg) : ForgeError("size cap exceeded: " + msg) {}
};

struct CapacityError : ForgeError {
  explicit CapacityError(const std::string& msg) : ForgeError("capacity: " + msg) {}
};

struct PreconditionError : ForgeError {
  explicit PreconditionError(const std::string& msg) : ForgeError("precondition: " + msg) {}
};

struct IncompleteError : ForgeError {
  explicit IncompleteError(const std::string& msg) : ForgeError("incomplete: " + msg) {}
};

struct UnboundVariable : ForgeError {
  explicit UnboundVariable(const std::string& msg) : ForgeError("unbound variable: " + msg) {}
};

}  // namespace bethforge
