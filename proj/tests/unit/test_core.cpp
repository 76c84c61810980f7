#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "lucid/core/ast.hpp"
#include "lucid/core/context.hpp"
#include "lucid/core/dictionary.hpp"
#include "lucid/core/types.hpp"
#include "lucid/core/value.hpp"
#include "support.hpp"

using namespace lucid;
using lucid::testing::code_of;

TEST_CASE("context override leaves the original alone") {
  Context p{{"d", Tag{1}}};
  Context q = p.override("d", Tag{5}).override("e", Tag{2});
  CHECK(p.query("d").value == 1);
  CHECK(q.query("d").value == 5);
  CHECK(q.query("e").value == 2);
  CHECK(q.str() == "{d:5, e:2}");
}

TEST_CASE("context equality and hash ignore binding order") {
  Context a = Context{}.override("x", Tag{1}).override("y", Tag{2});
  Context b = Context{}.override("y", Tag{2}).override("x", Tag{1});
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK_FALSE(a == a.override("x", Tag{3}));
}

TEST_CASE("querying an unbound dimension fails") {
  CHECK(code_of([] { Context{}.query("d"); }) == ErrorCode::UnboundDimension);
}

TEST_CASE("tag arithmetic is overflow checked") {
  const auto max = std::numeric_limits<std::int64_t>::max();
  CHECK((Tag{2} + Tag{3}).value == 5);
  CHECK(code_of([&] { (void)(Tag{max} + Tag{1}); }) == ErrorCode::TagOverflow);
  CHECK(code_of([&] { (void)checked_mul(max, 2); }) == ErrorCode::TagOverflow);
  CHECK(code_of([&] { (void)checked_sub(std::numeric_limits<std::int64_t>::min(), 1); }) == ErrorCode::TagOverflow);
}

TEST_CASE("gipsy types print and parse back") {
  for (const char* t : {"int", "float", "double", "bool", "string", "void", "dimension", "int[]", "Car", "Car[]"}) {
    CHECK(GipsyType::parse(t).str() == t);
  }
  CHECK(code_of([] { GipsyType::array(GipsyType::of(TypeKind::Void)); }) == ErrorCode::TypeError);
}

TEST_CASE("prototype type spellings") {
  CHECK(prototype_type("boolean", false) == GipsyType::of(TypeKind::Bool));
  CHECK(prototype_type("String", false) == GipsyType::of(TypeKind::String));
  CHECK(prototype_type("char", false) == GipsyType::of(TypeKind::String));
  CHECK(prototype_type("Nat42", true) == GipsyType::array(GipsyType::record("Nat42")));
}

TEST_CASE("type table, return direction") {
  using K = TypeKind;
  auto accepts = [](const char* host, K k) { return type_match(host, GipsyType::of(k), Direction::Return); };
  for (const char* h : {"int", "byte", "long"}) {
    CHECK(accepts(h, K::Int));
    CHECK_FALSE(accepts(h, K::Double));
  }
  CHECK(accepts("float", K::Float));
  CHECK_FALSE(accepts("float", K::Double));
  CHECK(accepts("double", K::Double));
  CHECK(accepts("boolean", K::Bool));
  CHECK(accepts("char", K::String));
  CHECK(accepts("String", K::String));
  CHECK(accepts("void", K::Bool));
  CHECK_FALSE(accepts("void", K::Int));
  CHECK(code_of([] { type_match("short", GipsyType::of(TypeKind::Int), Direction::Return); }) ==
        ErrorCode::UnknownHostType);
}

TEST_CASE("type table, parameter direction") {
  using K = TypeKind;
  auto accepts = [](const char* host, K k) { return type_match(host, GipsyType::of(k), Direction::Parameter); };
  CHECK(accepts("String", K::String));
  CHECK(accepts("float", K::Float));
  CHECK(accepts("double", K::Double));
  CHECK(accepts("int", K::Int));
  CHECK(accepts("int", K::Dimension));
  CHECK(accepts("boolean", K::Bool));
  CHECK_FALSE(accepts("double", K::Int));
  CHECK_FALSE(accepts("long", K::Int));
  CHECK_FALSE(accepts("char", K::String));
}

TEST_CASE("canonical value rendering") {
  CHECK(Value::integer(44).render() == "44");
  CHECK(Value::integer(-3).render() == "-3");
  CHECK(Value::real(2.5).render() == "2.5");
  CHECK(Value::real(1.0).render() == "1.0");
  CHECK(Value::real(0.1).render() == "0.1");
  CHECK(Value::single(0.1f).render() == "0.1");
  CHECK(Value::boolean(true).render() == "true");
  CHECK(Value::string("a\"b").render() == "\"a\\\"b\"");
  CHECK(Value::array(GipsyType::of(TypeKind::Int), {Value::integer(1), Value::integer(2)}).render() == "[1, 2]");
  CHECK(Value::record("P", {{"y", Value::integer(2)}, {"x", Value::real(1.5)}}).render() == "P{x=1.5, y=2}");
}

TEST_CASE("value kinds and accessors") {
  Value r = Value::record("Nat42", {{"n", Value::integer(42)}});
  CHECK(r.kind() == ValueKind::Rec);
  CHECK(r.as_record().className == "Nat42");
  CHECK(Value::host_fn("sin").kind() == ValueKind::HostFn);
  CHECK(Value::dim("d").as_dim() == "d");
  CHECK(Value::integer(3).as_double() == 3.0);
  CHECK(code_of([] { Value::boolean(true).as_int(); }) == ErrorCode::TypeError);
  CHECK(code_of([] { Value::array(GipsyType::of(TypeKind::Int), {Value::real(1.0)}); }) == ErrorCode::TypeError);
}

TEST_CASE("float text reads back exactly") {
  for (double d : {0.1, 1e-300, 123456789.123, -0.0, 1.0 / 3.0}) {
    CHECK(std::stod(format_double(d)) == d);
  }
  for (float f : {0.1f, 92.299995f, 1e-20f}) {
    CHECK(std::stof(format_float(f)) == f);
  }
}

TEST_CASE("dictionary scopes shadow and reject duplicates") {
  Dictionary d;
  int s1 = d.extend(Dictionary::kGlobal);
  int s2 = d.extend(s1);
  d.define(s1, "x", {EntryKind::Var, "outer"});
  d.define(s2, "x", {EntryKind::Dim, "inner"});
  CHECK(d.lookup(s2, "x")->kind == EntryKind::Dim);
  CHECK(d.lookup(s1, "x")->kind == EntryKind::Var);
  CHECK(d.resolve_scope(s2, "x") == s2);
  CHECK(d.lookup(Dictionary::kGlobal, "x") == nullptr);
  CHECK(code_of([&] { d.define(s1, "x", {EntryKind::Var, ""}); }) == ErrorCode::DuplicateDefinition);
  auto rows = d.rows();
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == DictRow{s1, "x", EntryKind::Var, "outer"});
}

TEST_CASE("cloned trees are structurally equal, positions aside") {
  NodePtr a = make_binop(Op::Add, "", make_literal(Value::integer(1), {1, 1}), make_id("N", {1, 5}));
  NodePtr b = clone(*a);
  b->kids[1]->pos = {9, 9};
  CHECK(structural_equal(*a, *b));
  b->kids[1]->scope = 3;
  CHECK(structural_equal(*a, *b));
  CHECK_FALSE(structural_equal(*a, *b, true));
  b->kids[1]->name = "M";
  CHECK_FALSE(structural_equal(*a, *b));
}

TEST_CASE("diagnostics carry file and position") {
  Error e(ErrorCode::SyntaxError, "unexpected ')'", {3, 7});
  CHECK(e.diagnostic("x.ipl") == "x.ipl:3:7: SyntaxError: unexpected ')'");
  CHECK(Error(ErrorCode::IoError, "gone").diagnostic("y") == "y: IoError: gone");
}
