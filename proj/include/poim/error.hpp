#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace poim {

enum class ErrorCode {
  NotTotal,
  NotHomomorphism,
  ViolatesFixing,
  HasVariables,
  InvalidInclusion,
  CodomainHasVariables,
  UnboundVariables,
  EmptyProjection,
  NotRelational,
  BlanksInPattern,
  TooLarge,
  Syntax,
  VariableInData,
  ReservedBlankPrefix,
  DuplicateProjectionVar,
  ProjectionNotInPattern,
  NotRdfGraph,
};

std::string_view toString(ErrorCode code);

// Base of every error raised by the library. `code()` is stable and meant for
// programmatic dispatch; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// 1-based line/column plus 0-based byte offset into the parsed text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, SourceSpan span, const std::string& message)
      : Error(code, format(span, message)), span_(span) {}

  const SourceSpan& span() const noexcept { return span_; }

 private:
  static std::string format(SourceSpan span, const std::string& message) {
    return std::to_string(span.line) + ":" + std::to_string(span.column) +
           ": " + message;
  }

  SourceSpan span_;
};

}  // namespace poim
