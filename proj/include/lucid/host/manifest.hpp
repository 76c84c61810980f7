#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucid/frontend/segments.hpp"
#include "lucid/host/registry.hpp"

namespace lucid {

// One exported function: `name : (type, ...) -> type [immutable]`, with
// host-side type names.
struct ManifestEntry {
  std::string name;
  std::vector<HostType> params;
  HostType ret;
  bool immutable = false;
  int line = 0;

  std::string signature() const;
};

// Blank lines and // comments are skipped. SyntaxError on malformed lines.
std::vector<ManifestEntry> parse_manifest(std::string_view text, int firstLine = 1);

// The prototype a manifest entry declares, in Lucid-side types.
Prototype prototype_of(const ManifestEntry& entry);

// Reads a manifest and registers every entry it lists, binding each to the
// built-in body of the same name. An entry naming an already registered
// function must agree with its signature.
void load_registry_manifest(HostRegistry& registry, const std::filesystem::path& path);

struct EmbedTarget {
  const HostFunction* fn = nullptr;
  ManifestEntry entry;
};

// Binds `method` of the manifest at `uri` (file:// only, relative paths
// taken from `baseDir`). CompileError for unreadable or unsupported URIs and
// for methods the manifest does not export; SignatureMismatch when the
// manifest, the registry body, the declared prototype or the call arity
// disagree.
EmbedTarget resolve_embed(std::string_view uri, std::string_view method, const Prototype* declared,
                          std::optional<std::size_t> arity, const std::filesystem::path& baseDir,
                          const HostRegistry& registry);

// Does a registered host function satisfy a Lucid-side prototype?
bool prototype_matches(const Prototype& proto, const std::vector<HostType>& params, const HostType& ret,
                       const HostRegistry& registry);

}  // namespace lucid
