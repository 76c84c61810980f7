#include "lucid/host/format_tag.hpp"

#include "lucid/core/error.hpp"

namespace lucid {

FormatTag::FormatTag() {
  for (const char* k : {"language", "os", "compiler", "version"}) specs_[k] = "unknown";
}

FormatTag FormatTag::native() {
  FormatTag t;
  t.set("language", "native");
#if defined(__linux__)
  t.set("os", "linux");
#elif defined(__APPLE__)
  t.set("os", "darwin");
#else
  t.set("os", "other");
#endif
#if defined(__clang__)
  t.set("compiler", "clang");
#elif defined(__GNUC__)
  t.set("compiler", "gcc");
#endif
  t.set("version", "1");
  return t;
}

FormatTag& FormatTag::set(const std::string& key, std::string value) {
  specs_[key] = std::move(value);
  return *this;
}

const std::string& FormatTag::get(const std::string& key) const {
  auto it = specs_.find(key);
  if (it == specs_.end()) fail(ErrorCode::FormatError, "format tag has no '" + key + "'");
  return it->second;
}

std::string FormatTag::render() const {
  std::string out;
  for (const auto& [k, v] : specs_) {
    if (!out.empty()) out += ";";
    out += k + "=" + v;
  }
  return out;
}

}  // namespace lucid
