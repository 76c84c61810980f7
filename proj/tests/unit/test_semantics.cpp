#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lucid/frontend/parser.hpp"
#include "lucid/semantics/analyzer.hpp"
#include "lucid/semantics/linker.hpp"
#include "lucid/semantics/serialize.hpp"
#include "support.hpp"

using namespace lucid;
using lucid::testing::code_of;
using lucid::testing::compile_text;

namespace {

ErrorCode analyze_error(std::string_view src, Dialect d = Dialect::Gipl) {
  return code_of([&] {
    NodePtr n = parse(src, d);
    analyze(*n, Dictionary{});
  });
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kFft = "#funcdecl\ndouble sin(double);\ndouble pi();\n#JLUCID\nsin(pi())\n";

}  // namespace

TEST_CASE("analysis annotates every identifier") {
  NodePtr n = parse_gipl("N @.d 2 where dimension d; N = f(#.d); f(x) = x + 1; end");
  Dictionary d = analyze(*n, Dictionary{});
  int ids = 0;
  walk(*n, [&](const Node& k) {
    if (k.kind == NodeKind::Id) {
      ++ids;
      CHECK(k.scope >= 0);
    }
    CHECK(k.id >= 0);
  });
  CHECK(ids == 5);
  int where = n->scope;
  CHECK(d.lookup(where, "d")->kind == EntryKind::Dim);
  CHECK(d.lookup(where, "N")->kind == EntryKind::Var);
  const DictEntry* f = d.lookup(where, "f");
  CHECK(f->kind == EntryKind::Func);
  CHECK(f->arity == 1);
  CHECK(d.lookup(Dictionary::kGlobal, "N") == nullptr);
}

TEST_CASE("inner definitions shadow outer ones") {
  NodePtr n = parse_gipl("x where x = 1; y = x where x = 2; end; end");
  Dictionary d = analyze(*n, Dictionary{});
  const Node& inner = *n->decls[1]->kids[0];
  REQUIRE(inner.kind == NodeKind::Where);
  const Node& xref = *inner.kids[0];
  CHECK(xref.scope == inner.scope);
  CHECK(n->kids[0]->scope == n->scope);
}

TEST_CASE("analysis errors") {
  CHECK(analyze_error("x where y = 1; end") == ErrorCode::UndefinedIdentifier);
  CHECK(analyze_error("N @.q 2 where dimension d; N = 1; end") == ErrorCode::NotADimension);
  CHECK(analyze_error("N @.d 2 where N = 1; d = 3; end") == ErrorCode::NotADimension);
  CHECK(analyze_error("f(1, 2) where f(x) = x; end") == ErrorCode::ArityMismatch);
  CHECK(analyze_error("x where x = 1; x = 2; end") == ErrorCode::DuplicateDefinition);
  CHECK(analyze_error("f + 1 where f(x) = x; end") == ErrorCode::TypeError);
  CHECK(analyze_error("x(1) where x = 1; end") == ErrorCode::TypeError);
  CHECK(analyze_error("first.d X where dimension d; X = 1; end", Dialect::Indexical) == ErrorCode::Unsupported);
}

TEST_CASE("linking the sine and pi prototypes") {
  EductionProgram p = compile_text(kFft);
  REQUIRE(p.stRefs.size() == 2);
  CHECK(p.stRefs[0].name == "pi");
  CHECK(p.stRefs[1].name == "sin");
  CHECK_FALSE(p.stRefs[1].immutable);
  CHECK(compile_text("#funcdecl\nimmutable double sin(double);\n#JLUCID\nsin(1.0)").stref("sin")->immutable);
  CHECK(p.stref("sin")->paramTypes == std::vector<GipsyType>{GipsyType::of(TypeKind::Double)});
}

TEST_CASE("link errors") {
  CHECK(code_of([] { compile_text("#funcdecl\nint sin(int);\n#JLUCID\nsin(1)"); }) == ErrorCode::SignatureMismatch);
  CHECK(code_of([] { compile_text("#funcdecl\nint nosuch(int);\n#JLUCID\nnosuch(1)"); }) ==
        ErrorCode::UnresolvedFunction);
  CHECK(code_of([] { compile_text("#typedecl\nBoat;\n#OBJECTIVELUCID\n1"); }) == ErrorCode::UnresolvedType);
}

TEST_CASE("record types are denormalized into the dictionary") {
  EductionProgram p = compile_text("#typedecl\nCar;\n#OBJECTIVELUCID\nCar().x");
  const Dictionary& d = p.dictionary;
  CHECK(d.lookup(0, "Car")->kind == EntryKind::Class);
  int vars = 0;
  for (const auto& [name, e] : d.entries(0)) {
    if (e.kind == EntryKind::ClassVar) {
      ++vars;
      CHECK(name.rfind("Car.", 0) == 0);
    }
  }
  CHECK(vars == 5);
  CHECK(d.lookup(0, "Car.x")->detail == "int");
  CHECK(d.lookup(0, "Car.fuel")->detail == "float");
  CHECK(d.lookup(0, "Car.move")->kind == EntryKind::ClassFun);
  CHECK(p.stref("Car") != nullptr);
  CHECK(p.stref("Car.move") != nullptr);
  CHECK_FALSE(p.stref("Car.printCarState")->immutable);
}

TEST_CASE("identifier contexts list the variables of each tree") {
  EductionProgram p = compile_text("#GIPL\nN where N = 1; end\n#GIPL\nM where M = 2; K = 3; end\n");
  REQUIRE(p.asts.size() == 2);
  std::vector<IdentifierContext> want = {{"N", 0}, {"K", 1}, {"M", 1}};
  std::sort(want.begin(), want.end(), [](auto& a, auto& b) { return std::tie(a.astIndex, a.name) < std::tie(b.astIndex, b.name); });
  CHECK(p.ics == want);
}

TEST_CASE("compile warnings and errors") {
  CompileOptions o;
  auto reg = HostRegistry::with_builtins();
  CompileResult r = compile("N where N = 1 fby N; end", reg, o);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].diagnostic("f.ipl").rfind("f.ipl:1:", 0) == 0);
  o.warningsAsErrors = true;
  CHECK(code_of([&] { compile("N where N = 1 fby N; end", reg, o); }) == ErrorCode::CompileError);
  CHECK(code_of([&] { compile("#PERL\nx\n#GIPL\n1", reg, {}); }) == ErrorCode::UnsupportedLanguage);
  CHECK(code_of([&] { compile("#funcdecl\nint f();\n", reg, {}); }) == ErrorCode::CompileError);
  CompileOptions off;
  off.translate = false;
  CHECK(code_of([&] { compile("1 fby.d 2 where dimension d; end", reg, off); }) == ErrorCode::Unsupported);
}

TEST_CASE("serialize then deserialize is the identity") {
  EductionProgram p = compile_text(kFft);
  std::string text = serialize(p);
  CHECK(text.rfind("{\n  \"version\": 1,\n  \"asts\": [", 0) == 0);
  EductionProgram q = deserialize(text, HostRegistry::with_builtins());
  CHECK(structurally_equal(p, q));
  CHECK(serialize(q) == text);
}

TEST_CASE("serialization is deterministic") {
  CHECK(serialize(compile_text(kFft)) == serialize(compile_text(kFft)));
}

TEST_CASE("truncated or tampered files are rejected") {
  std::string text = serialize(compile_text("N @.d 2 where dimension d; N = 42; end", Dialect::Gipl));
  auto reg = HostRegistry::with_builtins();
  for (std::size_t cut : {std::size_t{0}, text.size() / 3, text.size() / 2, text.size() - 2}) {
    INFO(cut);
    CHECK(code_of([&] { deserialize(text.substr(0, cut), reg); }) == ErrorCode::FormatError);
  }
  std::string renamed = text;
  auto at = renamed.find("\"N\"");
  REQUIRE(at != std::string::npos);
  renamed.replace(at, 3, "\"Q\"");
  CHECK(code_of([&] { deserialize(renamed, reg); }) == ErrorCode::FormatError);
}

TEST_CASE("loading into a registry without sin") {
  std::string text = serialize(compile_text(kFft));
  auto reg = std::make_shared<HostRegistry>();
  reg->register_function(*catalog_function("pi"));
  try {
    deserialize(text, reg);
    FAIL("expected UnresolvedFunction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnresolvedFunction);
    CHECK(e.message().find("sin") != std::string::npos);
  }
}

TEST_CASE("every corpus program that compiles round-trips") {
  namespace fs = std::filesystem;
  int n = 0;
  for (const char* suite : {"gipl", "indexical", "jlucid", "objective", "gipsy"}) {
    fs::path dir = fs::path(LUCID_CORPUS_DIR) / suite;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() != ".ipl") continue;
      CompileOptions o;
      o.baseDir = dir;
      if (std::string(suite) == "gipl") o.dialect = Dialect::Gipl;
      EductionProgram p;
      try {
        p = compile(slurp(entry.path()), HostRegistry::with_builtins(), o).program;
      } catch (const Error&) {
        continue;
      }
      INFO(entry.path().filename().string());
      EductionProgram q = deserialize(serialize(p), HostRegistry::with_builtins());
      CHECK(structurally_equal(p, q));
      ++n;
    }
  }
  CHECK(n >= 17);
}
