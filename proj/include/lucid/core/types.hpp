#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lucid {

enum class TypeKind {
  Int,
  Float,
  Double,
  Bool,
  String,
  Void,
  Dimension,
  Array,
  Record,
  Function,
  Embed,
  Identifier,
  Operator,
};

// The Lucid-side type universe. Arrays never hold Void and Void is only ever
// a function return kind; the factories enforce both.
class GipsyType {
 public:
  GipsyType() = default;  // Int

  static GipsyType of(TypeKind kind);
  static GipsyType array(GipsyType element);
  static GipsyType record(std::string className);
  static GipsyType function(std::vector<GipsyType> params, GipsyType ret);

  // Accepts the lexemes produced by str(): int, float, double, bool, string,
  // void, dimension, T[], (T,...)->T, and any other identifier as a record.
  static GipsyType parse(std::string_view text);

  TypeKind kind() const { return kind_; }
  const std::string& className() const { return class_name_; }
  const GipsyType& element() const;
  std::vector<GipsyType> params() const;
  const GipsyType& ret() const;

  bool is_scalar() const;
  std::string str() const;

  friend bool operator==(const GipsyType&, const GipsyType&) = default;

 private:
  TypeKind kind_ = TypeKind::Int;
  std::string class_name_;
  std::vector<GipsyType> children_;
};

// Host-side (imperative) type names, as they appear in host signatures and
// manifests: int, byte, long, float, double, boolean, char, String, void,
// a registered record class name, optionally with [] for arrays.
struct HostType {
  std::string name = "int";
  bool array = false;

  static HostType parse(std::string_view text);
  bool is_builtin() const;
  bool is_void() const { return !array && name == "void"; }
  std::string str() const { return array ? name + "[]" : name; }

  friend bool operator==(const HostType&, const HostType&) = default;
};

enum class Direction { Return, Parameter };

// The boundary table between host and Lucid types. In the return direction
// `hostType` is what the host function produces; in the parameter direction
// it is what the host function accepts. Host names outside the table raise
// UnknownHostType.
bool type_match(std::string_view hostType, const GipsyType& lucidType, Direction direction);

// The Lucid type a host return value arrives as (void arrives as Bool true).
GipsyType lucid_type_of_return(const HostType& host);

// Lucid-side types written in prototypes: int, double, bool, float, char,
// string, void or a declared identifier. `boolean` and `String` are accepted
// as spellings of bool and string.
GipsyType prototype_type(std::string_view lexeme, bool array);

}  // namespace lucid
