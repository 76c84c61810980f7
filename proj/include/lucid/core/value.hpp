#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lucid/core/types.hpp"

namespace lucid {

class Value;

enum class ValueKind { Int, Float, Double, Bool, Str, Dim, Arr, Rec, HostFn };

struct DimName {
  std::string name;
  friend bool operator==(const DimName&, const DimName&) = default;
};

struct HostFnRef {
  std::string name;
  friend bool operator==(const HostFnRef&, const HostFnRef&) = default;
};

struct ArrayData {
  GipsyType element;
  std::vector<Value> items;
};

struct RecordData {
  std::string className;
  std::map<std::string, Value> fields;
};

// A runtime datum. Arrays and records are immutable once built and shared by
// pointer, so copying a Value is cheap.
class Value {
 public:
  Value() : v_(std::int64_t{0}) {}

  static Value integer(std::int64_t i) { return Value(i); }
  static Value single(float f) { return Value(f); }
  static Value real(double d) { return Value(d); }
  static Value boolean(bool b) { return Value(b); }
  static Value string(std::string s) { return Value(std::move(s)); }
  static Value dim(std::string name) { return Value(DimName{std::move(name)}); }
  static Value host_fn(std::string name) { return Value(HostFnRef{std::move(name)}); }
  // Throws TypeError when an item does not conform to `element`.
  static Value array(GipsyType element, std::vector<Value> items);
  static Value record(std::string className, std::map<std::string, Value> fields);

  ValueKind kind() const;
  GipsyType type() const;

  bool is_numeric() const;
  std::int64_t as_int() const;
  float as_float() const;
  double as_double() const;  // any numeric kind, widened
  bool as_bool() const;
  const std::string& as_string() const;
  const std::string& as_dim() const;
  const std::string& as_host_fn() const;
  const ArrayData& as_array() const;
  const RecordData& as_record() const;

  // Canonical text: 44, 2.5, true, "s", [1, 2], Car{fuel=40.5, x=0}.
  std::string render() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  // Alternatives in ValueKind order; kind() is the variant index.
  using Storage = std::variant<std::int64_t, float, double, bool, std::string, DimName,
                               std::shared_ptr<const ArrayData>, std::shared_ptr<const RecordData>, HostFnRef>;

  template <typename T>
  explicit Value(T v) : v_(std::move(v)) {}

  Storage v_;
};

std::string_view to_string(ValueKind kind);

// Shortest text that reads back to the same number, always with a decimal
// point or exponent so it cannot be mistaken for an integer.
std::string format_double(double d);
std::string format_float(float f);

bool conforms(const Value& v, const GipsyType& type);

}  // namespace lucid
