#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lucid {

enum class ErrorCode {
  SyntaxError,
  InvalidSegment,
  UnsupportedLanguage,
  DuplicatePrototype,
  DuplicateDefinition,
  AmbiguousDimension,
  Unsupported,
  UndefinedIdentifier,
  NotADimension,
  ArityMismatch,
  UnresolvedFunction,
  SignatureMismatch,
  UnresolvedType,
  FormatError,
  UnboundDimension,
  DivisionByZero,
  TypeError,
  TagOverflow,
  IndexError,
  HostError,
  DepthExceeded,
  CommunicationError,
  WorkerDead,
  DuplicateRegistration,
  BoundaryTypeError,
  CompileError,
  UnknownField,
  UnknownMethod,
  UnknownHostType,
  IoError,
  UsageError,
};

std::string_view to_string(ErrorCode code);
std::optional<ErrorCode> error_code_from(std::string_view text);

struct SourcePos {
  int line = 0;
  int col = 0;

  bool known() const { return line > 0; }
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

// Every failure in the toolchain is reported through this one type; the code
// says what went wrong, the message carries the particulars.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, SourcePos pos = {});

  ErrorCode code() const { return code_; }
  const SourcePos& pos() const { return pos_; }
  const std::string& message() const { return message_; }

  // `file:line:col: Code: message`, omitting the position when unknown.
  std::string diagnostic(std::string_view file) const;

 private:
  ErrorCode code_;
  SourcePos pos_;
  std::string message_;
};

[[noreturn]] void fail(ErrorCode code, std::string message, SourcePos pos = {});

}  // namespace lucid
