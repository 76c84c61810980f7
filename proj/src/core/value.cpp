#include "lucid/core/value.hpp"

#include <charconv>
#include <cmath>

#include "lucid/core/error.hpp"

namespace lucid {

namespace {

template <typename F>
std::string shortest(F x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string out(buf, res.ptr);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double d) { return shortest(d); }
std::string format_float(float f) { return shortest(f); }

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Int: return "int";
    case ValueKind::Float: return "float";
    case ValueKind::Double: return "double";
    case ValueKind::Bool: return "bool";
    case ValueKind::Str: return "string";
    case ValueKind::Dim: return "dimension";
    case ValueKind::Arr: return "array";
    case ValueKind::Rec: return "record";
    case ValueKind::HostFn: return "function";
  }
  return "?";
}

bool conforms(const Value& v, const GipsyType& type) {
  switch (type.kind()) {
    case TypeKind::Int: return v.kind() == ValueKind::Int;
    case TypeKind::Float: return v.kind() == ValueKind::Float;
    case TypeKind::Double: return v.kind() == ValueKind::Double;
    case TypeKind::Bool: return v.kind() == ValueKind::Bool;
    case TypeKind::String: return v.kind() == ValueKind::Str;
    case TypeKind::Dimension: return v.kind() == ValueKind::Dim;
    case TypeKind::Record:
      return v.kind() == ValueKind::Rec && v.as_record().className == type.className();
    case TypeKind::Array:
      return v.kind() == ValueKind::Arr && v.as_array().element == type.element();
    case TypeKind::Function: return v.kind() == ValueKind::HostFn;
    default: return false;
  }
}

Value Value::array(GipsyType element, std::vector<Value> items) {
  if (element.kind() == TypeKind::Void) fail(ErrorCode::TypeError, "array of void");
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!conforms(items[i], element)) {
      fail(ErrorCode::TypeError, "array element " + std::to_string(i) + " is " +
                                     items[i].type().str() + ", expected " + element.str());
    }
  }
  auto data = std::make_shared<ArrayData>();
  data->element = std::move(element);
  data->items = std::move(items);
  return Value(std::shared_ptr<const ArrayData>(std::move(data)));
}

Value Value::record(std::string className, std::map<std::string, Value> fields) {
  auto data = std::make_shared<RecordData>();
  data->className = std::move(className);
  data->fields = std::move(fields);
  return Value(std::shared_ptr<const RecordData>(std::move(data)));
}

ValueKind Value::kind() const {
  return static_cast<ValueKind>(v_.index());
}

GipsyType Value::type() const {
  switch (kind()) {
    case ValueKind::Int: return GipsyType::of(TypeKind::Int);
    case ValueKind::Float: return GipsyType::of(TypeKind::Float);
    case ValueKind::Double: return GipsyType::of(TypeKind::Double);
    case ValueKind::Bool: return GipsyType::of(TypeKind::Bool);
    case ValueKind::Str: return GipsyType::of(TypeKind::String);
    case ValueKind::Dim: return GipsyType::of(TypeKind::Dimension);
    case ValueKind::Arr: return GipsyType::array(as_array().element);
    case ValueKind::Rec: return GipsyType::record(as_record().className);
    case ValueKind::HostFn: return GipsyType::of(TypeKind::Function);
  }
  return {};
}

bool Value::is_numeric() const {
  auto k = kind();
  return k == ValueKind::Int || k == ValueKind::Float || k == ValueKind::Double;
}

namespace {

[[noreturn]] void wrong(const Value& v, std::string_view wanted) {
  fail(ErrorCode::TypeError, "expected " + std::string(wanted) + ", got " +
                                 std::string(to_string(v.kind())) + " " + v.render());
}

}  // namespace

std::int64_t Value::as_int() const {
  if (auto p = std::get_if<std::int64_t>(&v_)) return *p;
  wrong(*this, "int");
}

float Value::as_float() const {
  if (auto p = std::get_if<float>(&v_)) return *p;
  wrong(*this, "float");
}

double Value::as_double() const {
  if (auto p = std::get_if<double>(&v_)) return *p;
  if (auto p = std::get_if<float>(&v_)) return *p;
  if (auto p = std::get_if<std::int64_t>(&v_)) return static_cast<double>(*p);
  wrong(*this, "number");
}

bool Value::as_bool() const {
  if (auto p = std::get_if<bool>(&v_)) return *p;
  wrong(*this, "bool");
}

const std::string& Value::as_string() const {
  if (auto p = std::get_if<std::string>(&v_)) return *p;
  wrong(*this, "string");
}

const std::string& Value::as_dim() const {
  if (auto p = std::get_if<DimName>(&v_)) return p->name;
  wrong(*this, "dimension");
}

const std::string& Value::as_host_fn() const {
  if (auto p = std::get_if<HostFnRef>(&v_)) return p->name;
  wrong(*this, "function");
}

const ArrayData& Value::as_array() const {
  if (auto p = std::get_if<std::shared_ptr<const ArrayData>>(&v_)) return **p;
  wrong(*this, "array");
}

const RecordData& Value::as_record() const {
  if (auto p = std::get_if<std::shared_ptr<const RecordData>>(&v_)) return **p;
  wrong(*this, "record");
}

std::string Value::render() const {
  switch (kind()) {
    case ValueKind::Int: return std::to_string(std::get<std::int64_t>(v_));
    case ValueKind::Float: return format_float(std::get<float>(v_));
    case ValueKind::Double: return format_double(std::get<double>(v_));
    case ValueKind::Bool: return std::get<bool>(v_) ? "true" : "false";
    case ValueKind::Str: return quote(std::get<std::string>(v_));
    case ValueKind::Dim: return std::get<DimName>(v_).name;
    case ValueKind::HostFn: return "<fn " + std::get<HostFnRef>(v_).name + ">";
    case ValueKind::Arr: {
      std::string out = "[";
      bool first = true;
      for (const auto& item : as_array().items) {
        if (!first) out += ", ";
        first = false;
        out += item.render();
      }
      return out + "]";
    }
    case ValueKind::Rec: {
      const auto& rec = as_record();
      std::string out = rec.className + "{";
      bool first = true;
      for (const auto& [name, field] : rec.fields) {
        if (!first) out += ", ";
        first = false;
        out += name + "=" + field.render();
      }
      return out + "}";
    }
  }
  return "?";
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ValueKind::Arr: {
      const auto& x = a.as_array();
      const auto& y = b.as_array();
      return x.element == y.element && x.items == y.items;
    }
    case ValueKind::Rec: {
      const auto& x = a.as_record();
      const auto& y = b.as_record();
      return x.className == y.className && x.fields == y.fields;
    }
    default:
      return a.v_ == b.v_;
  }
}

}  // namespace lucid
