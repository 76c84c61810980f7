#include "lucid/semantics/serialize.hpp"

#include "lucid/core/error.hpp"
#include "lucid/semantics/analyzer.hpp"
#include "lucid/semantics/codec.hpp"
#include "lucid/semantics/linker.hpp"

namespace lucid {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::FormatError, what); }

// Errors raised while rebuilding from well-formed JSON mean the file does
// not describe a valid program.
template <typename F>
auto rebuilding(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FormatError) throw;
    bad(std::string(what) + ": " + std::string(to_string(e.code())) + ": " + e.message());
  }
}

// One item per line inside each top-level list keeps the files diffable.
void emit_list(std::string& out, const char* key, const std::vector<Json>& items, bool last) {
  out += "  \"";
  out += key;
  out += "\": [";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += items[i].dump();
  }
  out += items.empty() ? "]" : "\n  ]";
  out += last ? "\n" : ",\n";
}

const Json& member(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing '") + key + "'");
  return *it;
}

const Json& list(const Json& doc, const char* key) {
  const Json& j = member(doc, key);
  if (!j.is_array()) bad(std::string("'") + key + "' must be a list");
  return j;
}

template <typename T>
T field(const Json& obj, const char* key) {
  if (!obj.is_object()) bad("expected an object, found " + obj.dump());
  auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing '") + key + "' in " + obj.dump());
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("bad '") + key + "' in " + obj.dump());
  }
}

}  // namespace

std::string serialize(const EductionProgram& prog) {
  std::vector<Json> asts, dict, refs, ics;
  for (const auto& a : prog.asts) asts.push_back(encode_node(*a));
  for (const auto& r : prog.dictionary.rows()) {
    dict.push_back(Json{{"scope", r.scope}, {"name", r.name}, {"kind", to_string(r.kind)}, {"detail", r.detail}});
  }
  for (const auto& r : prog.stRefs) {
    Json params = Json::array();
    for (const auto& p : r.paramTypes) params.push_back(p.str());
    refs.push_back(Json{{"name", r.name},
                        {"immutable", r.immutable},
                        {"returnType", r.returnType.str()},
                        {"paramTypes", params}});
  }
  for (const auto& ic : prog.ics) ics.push_back(Json{{"name", ic.name}, {"astIndex", ic.astIndex}});

  std::string out = "{\n  \"version\": 1,\n";
  emit_list(out, "asts", asts, false);
  emit_list(out, "dictionary", dict, false);
  emit_list(out, "strefs", refs, false);
  out += "  \"cpkind\": \"" + std::string(to_string(prog.cpKind)) + "\",\n";
  emit_list(out, "ics", ics, true);
  out += "}\n";
  return out;
}

EductionProgram deserialize(std::string_view text, std::shared_ptr<const HostRegistry> registry) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad("at offset " + std::to_string(e.byte) + ": not a complete .gipsy document");
  }
  if (!doc.is_object()) bad("at offset 0: a .gipsy document is an object");
  if (!member(doc, "version").is_number_integer() || member(doc, "version").get<int>() != 1) {
    bad("unsupported version " + member(doc, "version").dump());
  }

  EductionProgram prog;
  prog.registry = std::move(registry);
  for (const auto& r : list(doc, "strefs")) {
    StRef ref;
    ref.name = field<std::string>(r, "name");
    ref.immutable = field<bool>(r, "immutable");
    rebuilding("stref " + ref.name, [&] {
      ref.returnType = GipsyType::parse(field<std::string>(r, "returnType"));
      for (const auto& p : field<std::vector<std::string>>(r, "paramTypes")) ref.paramTypes.push_back(GipsyType::parse(p));
    });
    if (!prog.stRefs.empty() && !(prog.stRefs.back().name < ref.name)) bad("strefs are not sorted by name");
    prog.stRefs.push_back(std::move(ref));
  }

  std::vector<DictRow> rows;
  for (const auto& r : list(doc, "dictionary")) {
    auto kind = entry_kind_from(field<std::string>(r, "kind"));
    if (!kind) bad("unknown entry kind in " + r.dump());
    rows.push_back({field<int>(r, "scope"), field<std::string>(r, "name"), *kind, field<std::string>(r, "detail")});
  }
  // The global scope holds what linking added; everything else comes back
  // from analysis.
  for (const auto& row : rows) {
    if (row.scope != Dictionary::kGlobal) continue;
    const StRef* ref = prog.stref(row.name);
    int arity = ref ? static_cast<int>(ref->paramTypes.size()) : -1;
    if ((row.kind == EntryKind::FreeFun || row.kind == EntryKind::ClassFun) && !ref) {
      bad("no stref for '" + row.name + "'");
    }
    rebuilding("dictionary", [&] {
      prog.dictionary.define(Dictionary::kGlobal, row.name, {row.kind, row.detail, nullptr, -1, arity});
    });
  }

  for (const auto& a : list(doc, "asts")) {
    NodePtr stored = decode_node(a);
    NodePtr tree = clone(*stored);
    rebuilding("tree " + std::to_string(prog.asts.size()), [&] { analyze_into(*tree, prog.dictionary); });
    if (!structural_equal(*stored, *tree, true)) bad("scope annotations disagree with the declarations");
    prog.asts.push_back(tree);
  }
  if (prog.dictionary.rows() != rows) bad("dictionary does not match the trees");

  prog.cpKind = rebuilding("cpkind", [&] { return cp_kind_from(field<std::string>(doc, "cpkind")); });
  for (const auto& ic : list(doc, "ics")) {
    prog.ics.push_back({field<std::string>(ic, "name"), field<int>(ic, "astIndex")});
  }
  verify_strefs(prog);
  return prog;
}

}  // namespace lucid
