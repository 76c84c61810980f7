#include "lucid/core/dictionary.hpp"

namespace lucid {

namespace {

constexpr std::pair<EntryKind, std::string_view> kNames[] = {
    {EntryKind::Const, "const"},     {EntryKind::Op, "op"},
    {EntryKind::Dim, "dim"},         {EntryKind::Func, "func"},
    {EntryKind::Var, "var"},         {EntryKind::Formal, "formal"},
    {EntryKind::FreeFun, "freefun"}, {EntryKind::Class, "class"},
    {EntryKind::ClassVar, "classvar"}, {EntryKind::ClassFun, "classfun"},
};

}  // namespace

std::string_view to_string(EntryKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<EntryKind> entry_kind_from(std::string_view text) {
  for (const auto& [k, name] : kNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

Dictionary::Dictionary() { scopes_.push_back({}); }

int Dictionary::extend(int parent) {
  if (parent < 0 || parent >= static_cast<int>(scopes_.size())) {
    fail(ErrorCode::FormatError, "no scope " + std::to_string(parent));
  }
  scopes_.push_back(Scope{parent, {}});
  return static_cast<int>(scopes_.size()) - 1;
}

int Dictionary::parent(int scope) const { return scopes_.at(scope).parent; }

void Dictionary::define(int scope, const std::string& name, DictEntry entry, SourcePos pos) {
  auto& map = scopes_.at(scope).entries;
  if (map.count(name)) {
    fail(ErrorCode::DuplicateDefinition, "'" + name + "' is already defined in this scope", pos);
  }
  map.emplace(name, std::move(entry));
}

void Dictionary::redefine(int scope, const std::string& name, DictEntry entry) {
  scopes_.at(scope).entries[name] = std::move(entry);
}

const DictEntry* Dictionary::find_local(int scope, std::string_view name) const {
  const auto& map = scopes_.at(scope).entries;
  auto it = map.find(name);
  return it == map.end() ? nullptr : &it->second;
}

int Dictionary::resolve_scope(int scope, std::string_view name) const {
  for (int s = scope; s >= 0; s = scopes_[s].parent) {
    if (find_local(s, name)) return s;
  }
  return -1;
}

const DictEntry* Dictionary::lookup(int scope, std::string_view name) const {
  int s = resolve_scope(scope, name);
  return s < 0 ? nullptr : find_local(s, name);
}

const std::map<std::string, DictEntry, std::less<>>& Dictionary::entries(int scope) const {
  return scopes_.at(scope).entries;
}

std::vector<DictRow> Dictionary::rows() const {
  std::vector<DictRow> out;
  for (std::size_t s = 0; s < scopes_.size(); ++s) {
    for (const auto& [name, e] : scopes_[s].entries) {
      out.push_back({static_cast<int>(s), name, e.kind, e.detail});
    }
  }
  return out;
}

}  // namespace lucid
