#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lucid/frontend/lexer.hpp"
#include "lucid/frontend/parser.hpp"
#include "lucid/frontend/printer.hpp"
#include "lucid/frontend/segments.hpp"
#include "support.hpp"

using namespace lucid;
using lucid::testing::code_of;

namespace {

std::vector<Tok> kinds(std::string_view text) {
  std::vector<Tok> out;
  for (const auto& t : tokenize(text)) out.push_back(t.kind);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_round_trip(std::string_view text, Dialect d) {
  NodePtr a = parse(text, d);
  std::string printed = print(*a);
  NodePtr b = parse(printed, d);
  INFO(printed);
  CHECK(structural_equal(*a, *b));
  CHECK(print(*b) == printed);
}

}  // namespace

TEST_CASE("lexer: punctuation, literals and comments") {
  auto toks = tokenize("x <= 4 && y != 2.5 // trailing\n/* block */ \"s\\n\"");
  REQUIRE(toks.size() == 9);
  CHECK(toks[0].kind == Tok::Ident);
  CHECK(toks[1].kind == Tok::Le);
  CHECK(toks[2].value == Value::integer(4));
  CHECK(toks[3].kind == Tok::AndAnd);
  CHECK(toks[5].kind == Tok::NotEq);
  CHECK(toks[6].kind == Tok::Real);
  CHECK(toks[7].value == Value::string("s\n"));
  CHECK(toks[7].pos == SourcePos{2, 13});
  CHECK(toks[8].kind == Tok::End);
}

TEST_CASE("lexer: positions honour the first line") {
  auto toks = tokenize("a\n  b", 10);
  CHECK(toks[0].pos == SourcePos{10, 1});
  CHECK(toks[1].pos == SourcePos{11, 3});
}

TEST_CASE("lexer: errors") {
  CHECK(code_of([] { tokenize("\"open"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { tokenize("/* open"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { tokenize("a $ b"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { tokenize("99999999999999999999"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("lexer: single and double ampersand") {
  CHECK(kinds("a & b | c") == std::vector<Tok>{Tok::Ident, Tok::Amp, Tok::Ident, Tok::Pipe, Tok::Ident, Tok::End});
}

TEST_CASE("GIPL: precedence and associativity") {
  NodePtr n = parse_gipl("1 + 2 * 3 - 4");
  REQUIRE(n->kind == NodeKind::BinOp);
  CHECK(n->op == Op::Sub);
  CHECK(n->kids[0]->op == Op::Add);
  CHECK(n->kids[0]->kids[1]->op == Op::Mul);
  NodePtr c = parse_gipl("a < b && b < c");
  CHECK(c->op == Op::And);
}

TEST_CASE("GIPL: at and hash forms") {
  NodePtr n = parse_gipl("N @.d 2 where dimension d; N = #.d; end");
  REQUIRE(n->kind == NodeKind::Where);
  NodePtr at = n->kids[0];
  REQUIRE(at->kind == NodeKind::At);
  CHECK(at->kids[1]->name == "d");
  CHECK(n->decls.size() == 2);
  CHECK(n->decls[0]->kind == NodeKind::DimensionDecl);
  CHECK(n->decls[1]->kids[0]->kind == NodeKind::Hash);
  NodePtr br = parse_gipl("N @ [d : 2] where dimension d; N = #d; end");
  CHECK(structural_equal(*n, *br));
}

TEST_CASE("GIPL rejects stream operators") {
  CHECK(code_of([] { parse_gipl("X fby Y"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_gipl("first X"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("Indexical: stream operators with and without a dimension") {
  NodePtr n = parse_indexical("42 fby.d (N + 1)");
  CHECK(n->kind == NodeKind::BinOp);
  CHECK(n->op == Op::Fby);
  CHECK(n->opDim == "d");
  NodePtr u = parse_indexical("first X");
  CHECK(u->op == Op::First);
  CHECK(u->opDim.empty());
  NodePtr w = parse_indexical("X wvr.d P asa Q");
  CHECK(w->kind == NodeKind::BinOp);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_gipl("N where N = ; end");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.pos() == SourcePos{1, 13});
  }
  CHECK(code_of([] { parse_gipl("(1 + 2"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_gipl("1 2"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("JLucid and Objective constructs") {
  NodePtr a = parse("[1, 2, 3][0]", Dialect::JLucid);
  CHECK(a->kind == NodeKind::Index);
  NodePtr e = parse("embed(\"file://m\", \"merge\", x, y)", Dialect::JLucid);
  CHECK(e->kind == NodeKind::Embed);
  CHECK(e->text == "file://m");
  CHECK(e->name == "merge");
  CHECK(e->kids.size() == 2);
  NodePtr o = parse("C.move(1).fuel", Dialect::Objective);
  CHECK(o->kind == NodeKind::DotField);
  CHECK(o->kids[0]->kind == NodeKind::DotCall);
  CHECK(code_of([] { parse("C.fuel", Dialect::Gipl); }) == ErrorCode::SyntaxError);
}

TEST_CASE("printer round trip on constructed sources") {
  check_round_trip("if a then b else c fi + -d * !e", Dialect::Gipl);
  check_round_trip("f(1, 2.5, \"s\") @.d (#.d - 1) where dimension d; f(x, y, z) = x; end", Dialect::Gipl);
  check_round_trip("X wvr.d Y upon Z asa.e W", Dialect::Indexical);
  check_round_trip("next.d prev X fby first.d Y", Dialect::Indexical);
  check_round_trip("[1, 2][0] + embed(\"file://a\", \"b\", 1)", Dialect::JLucid);
  check_round_trip("(C @.t 3).m[t](1).f", Dialect::Objective);
}

TEST_CASE("printer round trip on the corpus") {
  namespace fs = std::filesystem;
  int seen = 0;
  for (const char* suite : {"gipl", "indexical", "jlucid", "objective", "gipsy"}) {
    for (const auto& entry : fs::directory_iterator(fs::path(LUCID_CORPUS_DIR) / suite)) {
      if (entry.path().extension() != ".ipl" || entry.path().stem() == "dup_proto") continue;
      SegmentedProgram sp = parse_segments(slurp(entry.path()), suite == std::string("gipl") ? "GIPL" : "INDEXICALLUCID");
      for (const auto& seg : sp.segments) {
        auto d = dialect_for_language(seg.langId);
        if (!d) continue;
        INFO(entry.path().filename().string());
        check_round_trip(seg.body, *d);
        ++seen;
      }
    }
  }
  CHECK(seen >= 25);
}

TEST_CASE("segments: markers, declarations and reassembly") {
  std::string src =
      "#funcdecl\nimmutable int get42();\ndouble sin(double);\n#typedecl\nCar;\n"
      "#JAVA\nclass X {}\n#JLUCID\nget42()\n";
  SegmentedProgram sp = parse_segments(src);
  REQUIRE(sp.funcDecls.size() == 2);
  CHECK(sp.funcDecls[0].immutable);
  CHECK(sp.funcDecls[0].signature() == "()->int");
  CHECK(sp.funcDecls[1].signature() == "(double)->double");
  CHECK(sp.typeDecls == std::vector<std::string>{"Car"});
  REQUIRE(sp.segments.size() == 2);
  CHECK(sp.segments[0].langId == "JAVA");
  CHECK(sp.segments[1].langId == "JLUCID");
  CHECK(sp.segments[1].startLine == 9);
  CHECK(reassemble(sp) == src);
}

TEST_CASE("segments: unmarked source gets the default language") {
  SegmentedProgram sp = parse_segments("1 + 1", "GIPL");
  REQUIRE(sp.segments.size() == 1);
  CHECK(sp.segments[0].langId == "GIPL");
}

TEST_CASE("segments: filters and duplicate prototypes") {
  SegmentFilter f;
  f.invalid = {"JAVA"};
  CHECK(code_of([&] { parse_segments("#JAVA\nx\n#GIPL\n1", "GIPL", f); }) == ErrorCode::InvalidSegment);
  SegmentFilter v;
  v.valid = {"GIPL"};
  CHECK(v.allows("GIPL"));
  CHECK_FALSE(v.allows("JLUCID"));
  CHECK(code_of([] { parse_segments("#funcdecl\nint f();\nint f();\n#GIPL\n1"); }) ==
        ErrorCode::DuplicatePrototype);
}

TEST_CASE("prototype parsing") {
  Prototype p = parse_prototype("immutable boolean[] f(String, int[])");
  CHECK(p.immutable);
  CHECK(p.signature() == "(string,int[])->bool[]");
  CHECK(code_of([] { parse_prototype("int (;"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("stub dictionary entries") {
  SegmentedProgram sp = parse_segments("#funcdecl\nint g(int, int);\n#typedecl\nCar;\n#JLUCID\n1");
  Dictionary d = build_stub_dictionary(sp);
  const DictEntry* g = d.lookup(Dictionary::kGlobal, "g");
  REQUIRE(g);
  CHECK(g->kind == EntryKind::FreeFun);
  CHECK(g->arity == 2);
  CHECK(d.lookup(Dictionary::kGlobal, "Car")->kind == EntryKind::Class);
}
