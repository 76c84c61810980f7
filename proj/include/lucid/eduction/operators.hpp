#pragma once

#include "lucid/core/ast.hpp"
#include "lucid/core/value.hpp"

namespace lucid {

// The data operators of E_op. Integer arithmetic is overflow-checked;
// mixed numeric operands widen Int -> Float -> Double. TypeError for
// operand kinds an operator does not take, DivisionByZero for / and % by 0.
Value apply_unary(Op op, const Value& v);
Value apply_binary(Op op, const Value& a, const Value& b);

}  // namespace lucid
