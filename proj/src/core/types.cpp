#include "lucid/core/types.hpp"

#include <array>
#include <cctype>

#include "lucid/core/error.hpp"
#include "lucid/core/text.hpp"

namespace lucid {

GipsyType GipsyType::of(TypeKind kind) {
  if (kind == TypeKind::Array || kind == TypeKind::Record || kind == TypeKind::Function) {
    fail(ErrorCode::TypeError, "composite type kind needs its components");
  }
  GipsyType t;
  t.kind_ = kind;
  return t;
}

GipsyType GipsyType::array(GipsyType element) {
  if (element.kind() == TypeKind::Void) fail(ErrorCode::TypeError, "array of void");
  GipsyType t;
  t.kind_ = TypeKind::Array;
  t.children_.push_back(std::move(element));
  return t;
}

GipsyType GipsyType::record(std::string className) {
  GipsyType t;
  t.kind_ = TypeKind::Record;
  t.class_name_ = std::move(className);
  return t;
}

GipsyType GipsyType::function(std::vector<GipsyType> params, GipsyType ret) {
  for (const auto& p : params) {
    if (p.kind() == TypeKind::Void) fail(ErrorCode::TypeError, "void parameter");
  }
  GipsyType t;
  t.kind_ = TypeKind::Function;
  t.children_ = std::move(params);
  t.children_.push_back(std::move(ret));
  return t;
}

const GipsyType& GipsyType::element() const {
  if (kind_ != TypeKind::Array) fail(ErrorCode::TypeError, str() + " is not an array type");
  return children_.front();
}

std::vector<GipsyType> GipsyType::params() const {
  if (kind_ != TypeKind::Function) return {};
  return {children_.begin(), children_.end() - 1};
}

const GipsyType& GipsyType::ret() const {
  if (kind_ != TypeKind::Function) fail(ErrorCode::TypeError, str() + " is not a function type");
  return children_.back();
}

bool GipsyType::is_scalar() const {
  switch (kind_) {
    case TypeKind::Int:
    case TypeKind::Float:
    case TypeKind::Double:
    case TypeKind::Bool:
    case TypeKind::String:
      return true;
    default:
      return false;
  }
}

std::string GipsyType::str() const {
  switch (kind_) {
    case TypeKind::Int: return "int";
    case TypeKind::Float: return "float";
    case TypeKind::Double: return "double";
    case TypeKind::Bool: return "bool";
    case TypeKind::String: return "string";
    case TypeKind::Void: return "void";
    case TypeKind::Dimension: return "dimension";
    case TypeKind::Array: return children_.front().str() + "[]";
    case TypeKind::Record: return class_name_;
    case TypeKind::Embed: return "embed";
    case TypeKind::Identifier: return "identifier";
    case TypeKind::Operator: return "operator";
    case TypeKind::Function: {
      std::string out = "(";
      for (std::size_t i = 0; i + 1 < children_.size(); ++i) {
        if (i) out += ",";
        out += children_[i].str();
      }
      return out + ")->" + children_.back().str();
    }
  }
  return "?";
}


GipsyType GipsyType::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(ErrorCode::FormatError, "empty type");
  if (text.front() == '(') {
    // (T,...)->R with no nested function types inside parameter lists
    auto close = text.find(')');
    auto arrow = text.find("->", close);
    if (close == std::string_view::npos || arrow == std::string_view::npos) {
      fail(ErrorCode::FormatError, "bad function type '" + std::string(text) + "'");
    }
    std::vector<GipsyType> params;
    auto inner = trim(text.substr(1, close - 1));
    while (!inner.empty()) {
      auto comma = inner.find(',');
      params.push_back(parse(inner.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      inner = trim(inner.substr(comma + 1));
    }
    return function(std::move(params), parse(text.substr(arrow + 2)));
  }
  if (text.size() > 2 && text.substr(text.size() - 2) == "[]") {
    return array(parse(text.substr(0, text.size() - 2)));
  }
  if (text == "int") return of(TypeKind::Int);
  if (text == "float") return of(TypeKind::Float);
  if (text == "double") return of(TypeKind::Double);
  if (text == "bool") return of(TypeKind::Bool);
  if (text == "string") return of(TypeKind::String);
  if (text == "void") return of(TypeKind::Void);
  if (text == "dimension") return of(TypeKind::Dimension);
  if (text == "embed") return of(TypeKind::Embed);
  if (text == "identifier") return of(TypeKind::Identifier);
  if (text == "operator") return of(TypeKind::Operator);
  return record(std::string(text));
}

namespace {

constexpr std::array<std::string_view, 9> kHostBuiltins = {
    "int", "byte", "long", "float", "double", "boolean", "char", "String", "void"};

bool is_host_builtin(std::string_view name) {
  for (auto n : kHostBuiltins) {
    if (n == name) return true;
  }
  return false;
}

}  // namespace

HostType HostType::parse(std::string_view text) {
  text = trim(text);
  HostType t;
  if (text.size() > 2 && text.substr(text.size() - 2) == "[]") {
    t.array = true;
    text = trim(text.substr(0, text.size() - 2));
  }
  if (text.empty()) fail(ErrorCode::FormatError, "empty host type");
  t.name = std::string(text);
  return t;
}

bool HostType::is_builtin() const { return is_host_builtin(name); }

bool type_match(std::string_view hostType, const GipsyType& lucidType, Direction direction) {
  if (!is_host_builtin(hostType)) {
    fail(ErrorCode::UnknownHostType, std::string(hostType));
  }
  const TypeKind k = lucidType.kind();
  if (direction == Direction::Return) {
    if (hostType == "int" || hostType == "byte" || hostType == "long") return k == TypeKind::Int;
    if (hostType == "float") return k == TypeKind::Float;
    if (hostType == "double") return k == TypeKind::Double;
    if (hostType == "boolean") return k == TypeKind::Bool;
    if (hostType == "char" || hostType == "String") return k == TypeKind::String;
    if (hostType == "void") return k == TypeKind::Bool;
    return false;
  }
  if (hostType == "String") return k == TypeKind::String;
  if (hostType == "float") return k == TypeKind::Float;
  if (hostType == "double") return k == TypeKind::Double;
  if (hostType == "int") return k == TypeKind::Int || k == TypeKind::Dimension;
  if (hostType == "boolean") return k == TypeKind::Bool;
  return false;  // byte, long, char, void: not in the parameter half
}

GipsyType lucid_type_of_return(const HostType& host) {
  GipsyType scalar;
  const auto& n = host.name;
  if (n == "int" || n == "byte" || n == "long") scalar = GipsyType::of(TypeKind::Int);
  else if (n == "float") scalar = GipsyType::of(TypeKind::Float);
  else if (n == "double") scalar = GipsyType::of(TypeKind::Double);
  else if (n == "boolean" || n == "void") scalar = GipsyType::of(TypeKind::Bool);
  else if (n == "char" || n == "String") scalar = GipsyType::of(TypeKind::String);
  else scalar = GipsyType::record(n);
  if (host.array) {
    if (host.name == "void") fail(ErrorCode::TypeError, "array of void");
    return GipsyType::array(scalar);
  }
  return scalar;
}

GipsyType prototype_type(std::string_view lexeme, bool array) {
  GipsyType base;
  if (lexeme == "int") base = GipsyType::of(TypeKind::Int);
  else if (lexeme == "double") base = GipsyType::of(TypeKind::Double);
  else if (lexeme == "bool" || lexeme == "boolean") base = GipsyType::of(TypeKind::Bool);
  else if (lexeme == "float") base = GipsyType::of(TypeKind::Float);
  else if (lexeme == "char" || lexeme == "string" || lexeme == "String") base = GipsyType::of(TypeKind::String);
  else if (lexeme == "void") base = GipsyType::of(TypeKind::Void);
  else base = GipsyType::record(std::string(lexeme));
  return array ? GipsyType::array(base) : base;
}

}  // namespace lucid
