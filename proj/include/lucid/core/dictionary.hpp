#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucid/core/ast.hpp"

namespace lucid {

enum class EntryKind {
  Const,
  Op,
  Dim,
  Func,
  Var,
  Formal,
  FreeFun,
  Class,
  ClassVar,
  ClassFun,
};

std::string_view to_string(EntryKind kind);
std::optional<EntryKind> entry_kind_from(std::string_view text);

struct DictEntry {
  EntryKind kind = EntryKind::Var;
  // Printable particulars: formals for Func, a signature for FreeFun and
  // ClassFun, a type for ClassVar, the class name for Class.
  std::string detail;
  // The defining node inside the owning tree (VarDecl, FuncDecl, the
  // DimensionDecl, ...). Not serialized; rebuilt by analysis.
  const Node* def = nullptr;
  int formalIndex = -1;  // Formal: position among the function's formals
  int arity = -1;        // Func, FreeFun: number of arguments taken
};

struct DictRow {
  int scope = 0;
  std::string name;
  EntryKind kind = EntryKind::Var;
  std::string detail;

  friend bool operator==(const DictRow&, const DictRow&) = default;
};

// A tree of scopes. Scope 0 is the global scope; extend() opens a child.
// Lookup walks from a scope towards the root, so an inner definition
// shadows an outer one and the outer one reappears once the inner scope is
// left.
class Dictionary {
 public:
  Dictionary();

  static constexpr int kGlobal = 0;

  int extend(int parent);
  int parent(int scope) const;
  std::size_t scope_count() const { return scopes_.size(); }

  // Throws DuplicateDefinition when `name` is already defined in `scope`.
  void define(int scope, const std::string& name, DictEntry entry, SourcePos pos = {});
  void redefine(int scope, const std::string& name, DictEntry entry);

  const DictEntry* lookup(int scope, std::string_view name) const;
  // The scope in which `name` resolves from `scope`, or -1.
  int resolve_scope(int scope, std::string_view name) const;
  const DictEntry* find_local(int scope, std::string_view name) const;
  const std::map<std::string, DictEntry, std::less<>>& entries(int scope) const;

  // Every entry, ordered by (scope, name).
  std::vector<DictRow> rows() const;

 private:
  struct Scope {
    int parent = -1;
    std::map<std::string, DictEntry, std::less<>> entries;
  };
  std::vector<Scope> scopes_;
};

}  // namespace lucid
