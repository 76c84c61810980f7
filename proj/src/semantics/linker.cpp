#include "lucid/semantics/linker.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lucid/core/error.hpp"
#include "lucid/host/manifest.hpp"
#include "lucid/semantics/analyzer.hpp"

namespace lucid {

GipsyType lucid_side(const HostType& host) {
  return host.is_void() ? GipsyType::of(TypeKind::Void) : lucid_type_of_return(host);
}

namespace {

std::vector<GipsyType> lucid_params(const std::vector<HostType>& params) {
  std::vector<GipsyType> out;
  for (const auto& p : params) out.push_back(lucid_side(p));
  return out;
}

std::string signature_of(const StRef& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.paramTypes.size(); ++i) s += (i ? "," : "") + r.paramTypes[i].str();
  return s + ")->" + r.returnType.str();
}

StRef method_ref(const HostRecordType& rt, const HostMethod& m) {
  return {rt.className + "." + m.name, m.immutable, lucid_side(m.ret), lucid_params(m.params)};
}

StRef ctor_ref(const HostRecordType& rt) {
  return {rt.className, rt.ctorImmutable, GipsyType::record(rt.className), lucid_params(rt.ctorParams)};
}

class RefSet {
 public:
  void add(StRef r, SourcePos pos = {}) {
    auto [it, fresh] = refs_.emplace(r.name, r);
    if (!fresh && !(it->second == r)) {
      fail(ErrorCode::SignatureMismatch,
           r.name + " is bound twice with different signatures: " + signature_of(it->second) + " and " +
               signature_of(r),
           pos);
    }
  }
  std::vector<StRef> sorted() const {
    std::vector<StRef> out;
    for (const auto& [_, r] : refs_) out.push_back(r);
    return out;
  }

 private:
  std::map<std::string, StRef> refs_;
};

void link_record(const std::string& className, const HostRegistry& registry, Dictionary& dict, RefSet& refs) {
  const HostRecordType* rt = registry.find_record(className);
  if (!rt) fail(ErrorCode::UnresolvedType, "no host record type named '" + className + "'");
  for (const auto& [field, type] : rt->fields) {
    dict.define(Dictionary::kGlobal, className + "." + field, {EntryKind::ClassVar, lucid_side(type).str()});
  }
  for (const auto& [name, m] : rt->methods) {
    StRef r = method_ref(*rt, m);
    dict.define(Dictionary::kGlobal, r.name,
                {EntryKind::ClassFun, signature_of(r), nullptr, -1, static_cast<int>(m.params.size())});
    refs.add(r);
  }
  refs.add(ctor_ref(*rt));
}

void link_prototype(const Prototype& p, const HostRegistry& registry, const std::filesystem::path& baseDir,
                    RefSet& refs) {
  if (p.embed) {
    if (!p.embed->remoteName.empty() && p.embed->remoteName != p.name) {
      fail(ErrorCode::Unsupported, p.name + ": an embedded function must keep its exported name", p.pos);
    }
    resolve_embed(p.embed->uri, p.name, &p, p.paramTypes.size(), baseDir, registry);
  } else {
    const HostFunction* fn = registry.find(p.name);
    if (!fn) fail(ErrorCode::UnresolvedFunction, "no host function named '" + p.name + "'", p.pos);
    if (!prototype_matches(p, fn->params, fn->ret, registry)) {
      fail(ErrorCode::SignatureMismatch, p.name + ": declared " + p.signature() + ", found " + fn->signature(),
           p.pos);
    }
  }
  refs.add({p.name, p.immutable, p.returnType, p.paramTypes}, p.pos);
}

void link_embeds(Node& root, const HostRegistry& registry, const std::filesystem::path& baseDir, Dictionary& dict,
                 RefSet& refs) {
  walk(root, [&](const Node& n) {
    if (n.kind != NodeKind::Embed) return;
    const DictEntry* declared = dict.find_local(Dictionary::kGlobal, n.name);
    if (declared && declared->kind != EntryKind::FreeFun) {
      fail(ErrorCode::DuplicateDefinition, "'" + n.name + "' is already declared as a " +
                                               std::string(to_string(declared->kind)), n.pos);
    }
    EmbedTarget t = resolve_embed(n.text, n.name, nullptr, n.kids.size(), baseDir, registry);
    Prototype p = prototype_of(t.entry);
    refs.add({p.name, p.immutable, p.returnType, p.paramTypes}, n.pos);
  });
}

}  // namespace

EductionProgram link(const SegmentedProgram& prog, std::vector<NodePtr> asts,
                     std::shared_ptr<const HostRegistry> registry, const LinkOptions& opts) {
  EductionProgram out;
  out.registry = registry;
  out.cpKind = opts.cpKind;
  out.dictionary = build_stub_dictionary(prog);
  RefSet refs;
  for (const auto& p : prog.funcDecls) link_prototype(p, *registry, opts.baseDir, refs);
  for (const auto& t : prog.typeDecls) link_record(t, *registry, out.dictionary, refs);

  std::set<std::pair<int, std::string>> ics;
  for (std::size_t i = 0; i < asts.size(); ++i) {
    analyze_into(*asts[i], out.dictionary);
    link_embeds(*asts[i], *registry, opts.baseDir, out.dictionary, refs);
    walk(*asts[i], [&](const Node& n) {
      if (n.kind == NodeKind::VarDecl) ics.insert({static_cast<int>(i), n.name});
    });
  }
  out.asts = std::move(asts);
  out.stRefs = refs.sorted();
  for (const auto& [index, name] : ics) out.ics.push_back({name, index});
  return out;
}

void verify_strefs(const EductionProgram& prog) {
  const HostRegistry& registry = *prog.registry;
  for (const auto& r : prog.stRefs) {
    StRef found;
    if (auto dot = r.name.find('.'); dot != std::string::npos) {
      std::string cls = r.name.substr(0, dot);
      const HostRecordType* rt = registry.find_record(cls);
      if (!rt) fail(ErrorCode::UnresolvedType, "no host record type named '" + cls + "'");
      auto m = rt->methods.find(r.name.substr(dot + 1));
      if (m == rt->methods.end()) fail(ErrorCode::UnresolvedFunction, "no host method named '" + r.name + "'");
      found = method_ref(*rt, m->second);
    } else if (const HostRecordType* rt = registry.find_record(r.name)) {
      found = ctor_ref(*rt);
    } else {
      const HostFunction* fn = registry.find(r.name);
      if (!fn) fail(ErrorCode::UnresolvedFunction, "no host function named '" + r.name + "'");
      Prototype p{r.name, r.immutable, r.returnType, r.paramTypes, std::nullopt, {}};
      if (!prototype_matches(p, fn->params, fn->ret, registry)) {
        fail(ErrorCode::SignatureMismatch, r.name + ": recorded " + signature_of(r) + ", found " + fn->signature());
      }
      continue;
    }
    if (found.paramTypes != r.paramTypes || found.returnType != r.returnType) {
      fail(ErrorCode::SignatureMismatch, r.name + ": recorded " + signature_of(r) + ", found " + signature_of(found));
    }
  }
}

}  // namespace lucid
