#include "lucid/eduction/operators.hpp"

#include <limits>

#include "lucid/core/context.hpp"
#include "lucid/core/error.hpp"

namespace lucid {

namespace {

[[noreturn]] void type_error(Op op, const Value& a) {
  fail(ErrorCode::TypeError,
       "operator '" + std::string(op_symbol(op)) + "' does not take " + std::string(to_string(a.kind())));
}

[[noreturn]] void type_error(Op op, const Value& a, const Value& b) {
  fail(ErrorCode::TypeError, "operator '" + std::string(op_symbol(op)) + "' does not take " +
                                 std::string(to_string(a.kind())) + " and " + std::string(to_string(b.kind())));
}

int rank(ValueKind k) { return k == ValueKind::Int ? 0 : k == ValueKind::Float ? 1 : 2; }

template <typename T>
Value wrap(T x) {
  if constexpr (std::is_same_v<T, float>) return Value::single(x);
  else return Value::real(x);
}

template <typename T>
Value real_arith(Op op, T a, T b, const Value& va, const Value& vb) {
  switch (op) {
    case Op::Add: return wrap<T>(a + b);
    case Op::Sub: return wrap<T>(a - b);
    case Op::Mul: return wrap<T>(a * b);
    case Op::Div:
      if (b == 0) fail(ErrorCode::DivisionByZero, "division by zero");
      return wrap<T>(a / b);
    case Op::Lt: return Value::boolean(a < b);
    case Op::Le: return Value::boolean(a <= b);
    case Op::Gt: return Value::boolean(a > b);
    case Op::Ge: return Value::boolean(a >= b);
    case Op::Eq: return Value::boolean(a == b);
    case Op::Ne: return Value::boolean(a != b);
    default: type_error(op, va, vb);
  }
}

Value int_arith(Op op, std::int64_t a, std::int64_t b, const Value& va, const Value& vb) {
  switch (op) {
    case Op::Add: return Value::integer(checked_add(a, b));
    case Op::Sub: return Value::integer(checked_sub(a, b));
    case Op::Mul: return Value::integer(checked_mul(a, b));
    case Op::Div:
    case Op::Mod:
      if (b == 0) fail(ErrorCode::DivisionByZero, op == Op::Div ? "division by zero" : "modulo by zero");
      if (a == std::numeric_limits<std::int64_t>::min() && b == -1) {
        if (op == Op::Mod) return Value::integer(0);
        fail(ErrorCode::TagOverflow, "integer overflow");
      }
      return Value::integer(op == Op::Div ? a / b : a % b);
    case Op::Lt: return Value::boolean(a < b);
    case Op::Le: return Value::boolean(a <= b);
    case Op::Gt: return Value::boolean(a > b);
    case Op::Ge: return Value::boolean(a >= b);
    case Op::Eq: return Value::boolean(a == b);
    case Op::Ne: return Value::boolean(a != b);
    case Op::BitAnd: return Value::integer(a & b);
    case Op::BitOr: return Value::integer(a | b);
    default: type_error(op, va, vb);
  }
}

}  // namespace

Value apply_unary(Op op, const Value& v) {
  switch (op) {
    case Op::Neg:
      switch (v.kind()) {
        case ValueKind::Int: return Value::integer(checked_sub(0, v.as_int()));
        case ValueKind::Float: return Value::single(-v.as_float());
        case ValueKind::Double: return Value::real(-v.as_double());
        default: type_error(op, v);
      }
    case Op::Not:
      if (v.kind() != ValueKind::Bool) type_error(op, v);
      return Value::boolean(!v.as_bool());
    default:
      fail(ErrorCode::Unsupported, "operator '" + std::string(op_symbol(op)) + "' must be translated first");
  }
}

Value apply_binary(Op op, const Value& a, const Value& b) {
  if (a.is_numeric() && b.is_numeric()) {
    if (op == Op::Mod && (a.kind() != ValueKind::Int || b.kind() != ValueKind::Int)) type_error(op, a, b);
    int r = std::max(rank(a.kind()), rank(b.kind()));
    if (r == 0) return int_arith(op, a.as_int(), b.as_int(), a, b);
    if (op == Op::BitAnd || op == Op::BitOr) type_error(op, a, b);
    if (r == 1) return real_arith<float>(op, a.kind() == ValueKind::Int ? static_cast<float>(a.as_int()) : a.as_float(),
                                         b.kind() == ValueKind::Int ? static_cast<float>(b.as_int()) : b.as_float(), a, b);
    return real_arith<double>(op, a.as_double(), b.as_double(), a, b);
  }
  if (a.kind() == ValueKind::Bool && b.kind() == ValueKind::Bool) {
    bool x = a.as_bool(), y = b.as_bool();
    switch (op) {
      case Op::And:
      case Op::BitAnd: return Value::boolean(x && y);
      case Op::Or:
      case Op::BitOr: return Value::boolean(x || y);
      case Op::Eq: return Value::boolean(x == y);
      case Op::Ne: return Value::boolean(x != y);
      default: type_error(op, a, b);
    }
  }
  if (a.kind() == ValueKind::Str && b.kind() == ValueKind::Str) {
    const auto& x = a.as_string();
    const auto& y = b.as_string();
    switch (op) {
      case Op::Add: return Value::string(x + y);
      case Op::Lt: return Value::boolean(x < y);
      case Op::Le: return Value::boolean(x <= y);
      case Op::Gt: return Value::boolean(x > y);
      case Op::Ge: return Value::boolean(x >= y);
      case Op::Eq: return Value::boolean(x == y);
      case Op::Ne: return Value::boolean(x != y);
      default: type_error(op, a, b);
    }
  }
  if (a.kind() == b.kind() && (op == Op::Eq || op == Op::Ne)) {
    return Value::boolean((a == b) == (op == Op::Eq));
  }
  type_error(op, a, b);
}

}  // namespace lucid
