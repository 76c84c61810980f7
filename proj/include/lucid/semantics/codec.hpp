#pragma once

#include <json.hpp>

#include "lucid/core/ast.hpp"
#include "lucid/core/context.hpp"
#include "lucid/core/value.hpp"

namespace lucid {

using Json = nlohmann::ordered_json;

// Typed literals: ["int", 5], ["double", "2.5"], ["bool", true],
// ["string", "s"], ["dim", "d"], ["array", "int", [...]],
// ["record", "Car", {"x": [...], ...}].
Json encode_value(const Value& v);
Value decode_value(const Json& j);

// [["d", 2], ["e", 0]]
Json encode_context(const Context& c);
Context decode_context(const Json& j);

// [kind, line, col, {attributes}, [kids], [decls], [subs]]
Json encode_node(const Node& n);
NodePtr decode_node(const Json& j);

}  // namespace lucid
