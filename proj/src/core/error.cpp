#include "lucid/core/error.hpp"

namespace lucid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidSegment: return "InvalidSegment";
    case ErrorCode::UnsupportedLanguage: return "UnsupportedLanguage";
    case ErrorCode::DuplicatePrototype: return "DuplicatePrototype";
    case ErrorCode::DuplicateDefinition: return "DuplicateDefinition";
    case ErrorCode::AmbiguousDimension: return "AmbiguousDimension";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UndefinedIdentifier: return "UndefinedIdentifier";
    case ErrorCode::NotADimension: return "NotADimension";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnresolvedFunction: return "UnresolvedFunction";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::UnresolvedType: return "UnresolvedType";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::UnboundDimension: return "UnboundDimension";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::TypeError: return "TypeError";
    case ErrorCode::TagOverflow: return "TagOverflow";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::HostError: return "HostError";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::CommunicationError: return "CommunicationError";
    case ErrorCode::WorkerDead: return "WorkerDead";
    case ErrorCode::DuplicateRegistration: return "DuplicateRegistration";
    case ErrorCode::BoundaryTypeError: return "BoundaryTypeError";
    case ErrorCode::CompileError: return "CompileError";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::UnknownMethod: return "UnknownMethod";
    case ErrorCode::UnknownHostType: return "UnknownHostType";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Error";
}

std::optional<ErrorCode> error_code_from(std::string_view text) {
  for (int c = 0; c <= static_cast<int>(ErrorCode::UsageError); ++c) {
    if (to_string(static_cast<ErrorCode>(c)) == text) return static_cast<ErrorCode>(c);
  }
  return std::nullopt;
}

namespace {

std::string compose(ErrorCode code, const std::string& message) {
  std::string out{to_string(code)};
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, SourcePos pos)
    : std::runtime_error(compose(code, message)),
      code_(code),
      pos_(pos),
      message_(std::move(message)) {}

std::string Error::diagnostic(std::string_view file) const {
  std::string out{file};
  if (pos_.known()) {
    out += ':' + std::to_string(pos_.line) + ':' + std::to_string(pos_.col);
  }
  if (!out.empty()) out += ": ";
  out += what();
  return out;
}

void fail(ErrorCode code, std::string message, SourcePos pos) {
  throw Error(code, std::move(message), pos);
}

}  // namespace lucid
