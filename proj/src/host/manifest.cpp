#include "lucid/host/manifest.hpp"

#include <fstream>
#include <sstream>

#include "lucid/core/error.hpp"
#include "lucid/core/text.hpp"

namespace lucid {

std::string ManifestEntry::signature() const {
  std::string s = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += params[i].str();
  }
  return s + ")->" + ret.str();
}

std::vector<ManifestEntry> parse_manifest(std::string_view text, int firstLine) {
  std::vector<ManifestEntry> out;
  std::string clean = strip_comments(text);
  int line = firstLine;
  for (auto raw : split(clean, '\n')) {
    SourcePos pos{line++, 1};
    auto l = trim(raw);
    if (l.empty()) continue;
    auto colon = l.find(':');
    auto open = l.find('(');
    auto close = l.find(')');
    auto arrow = l.find("->");
    if (colon == std::string_view::npos || open == std::string_view::npos || close == std::string_view::npos ||
        arrow == std::string_view::npos || !(colon < open && open < close && close < arrow)) {
      fail(ErrorCode::SyntaxError, "expected 'name : (types) -> type [immutable]', got '" + std::string(l) + "'",
           pos);
    }
    ManifestEntry e;
    e.line = pos.line;
    e.name = std::string(trim(l.substr(0, colon)));
    if (!is_identifier(e.name)) fail(ErrorCode::SyntaxError, "bad export name '" + e.name + "'", pos);
    auto params = trim(l.substr(open + 1, close - open - 1));
    if (!params.empty()) {
      for (auto p : split(params, ',')) {
        HostType t = HostType::parse(p);
        if (t.is_void()) fail(ErrorCode::SyntaxError, "void is not a parameter type", pos);
        e.params.push_back(t);
      }
    }
    auto tail = trim(l.substr(arrow + 2));
    auto space = tail.find_first_of(" \t");
    e.ret = HostType::parse(tail.substr(0, space));
    if (space != std::string_view::npos) {
      auto flag = trim(tail.substr(space));
      if (flag != "immutable") fail(ErrorCode::SyntaxError, "unexpected '" + std::string(flag) + "'", pos);
      e.immutable = true;
    }
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

GipsyType lucid_param_type(const HostType& h) {
  GipsyType base;
  const auto& n = h.name;
  if (n == "int" || n == "byte" || n == "long") base = GipsyType::of(TypeKind::Int);
  else if (n == "float") base = GipsyType::of(TypeKind::Float);
  else if (n == "double") base = GipsyType::of(TypeKind::Double);
  else if (n == "boolean") base = GipsyType::of(TypeKind::Bool);
  else if (n == "char" || n == "String") base = GipsyType::of(TypeKind::String);
  else base = GipsyType::record(n);
  return h.array ? GipsyType::array(base) : base;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Prototype prototype_of(const ManifestEntry& entry) {
  Prototype p;
  p.name = entry.name;
  p.immutable = entry.immutable;
  p.pos = {entry.line, 1};
  for (const auto& h : entry.params) p.paramTypes.push_back(lucid_param_type(h));
  p.returnType = entry.ret.is_void() ? GipsyType::of(TypeKind::Void) : lucid_type_of_return(entry.ret);
  return p;
}

bool prototype_matches(const Prototype& proto, const std::vector<HostType>& params, const HostType& ret,
                       const HostRegistry& registry) {
  auto isRecord = [&](const std::string& n) { return registry.is_record(n); };
  if (proto.paramTypes.size() != params.size()) return false;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!host_matches(params[i], proto.paramTypes[i], Direction::Parameter, isRecord)) return false;
  }
  if (proto.returnType.kind() == TypeKind::Void) return ret.is_void();
  return host_matches(ret, proto.returnType, Direction::Return, isRecord);
}

void load_registry_manifest(HostRegistry& registry, const std::filesystem::path& path) {
  for (const auto& e : parse_manifest(read_file(path))) {
    if (const HostFunction* existing = registry.find(e.name)) {
      if (existing->params != e.params || existing->ret != e.ret) {
        fail(ErrorCode::SignatureMismatch,
             e.name + ": manifest declares " + e.signature() + ", registry has " + existing->signature());
      }
      continue;
    }
    const HostFunction* body = catalog_function(e.name);
    if (!body) fail(ErrorCode::UnresolvedFunction, e.name + " (no built-in body of that name)");
    if (body->params != e.params || body->ret != e.ret) {
      fail(ErrorCode::SignatureMismatch,
           e.name + ": manifest declares " + e.signature() + ", built-in body is " + body->signature());
    }
    HostFunction f = *body;
    f.immutable = e.immutable;
    registry.register_function(std::move(f));
  }
}

EmbedTarget resolve_embed(std::string_view uri, std::string_view method, const Prototype* declared,
                          std::optional<std::size_t> arity, const std::filesystem::path& baseDir,
                          const HostRegistry& registry) {
  constexpr std::string_view kFile = "file://";
  if (uri.substr(0, kFile.size()) != kFile) {
    auto scheme = uri.find("://");
    std::string s = scheme == std::string_view::npos ? std::string(uri) : std::string(uri.substr(0, scheme));
    fail(ErrorCode::CompileError, "InvalidURI: scheme '" + s + "' is not supported, only file://");
  }
  std::filesystem::path path(std::string(uri.substr(kFile.size())));
  if (path.is_relative()) path = baseDir / path;
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error&) {
    fail(ErrorCode::CompileError, "InvalidURI: cannot read " + path.string());
  }
  std::vector<ManifestEntry> entries;
  try {
    entries = parse_manifest(text);
  } catch (const Error& e) {
    fail(ErrorCode::CompileError, "InvalidURI: " + path.string() + " is not a manifest (" + e.message() + ")");
  }
  auto it = std::find_if(entries.begin(), entries.end(), [&](const ManifestEntry& e) { return e.name == method; });
  if (it == entries.end()) {
    fail(ErrorCode::CompileError, "InvalidURI: " + path.string() + " does not export " + std::string(method));
  }
  const HostFunction* fn = registry.find(method);
  if (!fn) fail(ErrorCode::UnresolvedFunction, std::string(method));
  if (fn->params != it->params || fn->ret != it->ret) {
    fail(ErrorCode::SignatureMismatch,
         std::string(method) + ": manifest declares " + it->signature() + ", registry has " + fn->signature());
  }
  if (arity && *arity != it->params.size()) {
    fail(ErrorCode::SignatureMismatch, std::string(method) + " takes " + std::to_string(it->params.size()) +
                                           " argument(s), embedded with " + std::to_string(*arity));
  }
  if (declared && !prototype_matches(*declared, fn->params, fn->ret, registry)) {
    fail(ErrorCode::SignatureMismatch,
         std::string(method) + ": declared " + declared->signature() + ", found " + fn->signature());
  }
  return {fn, *it};
}

}  // namespace lucid
