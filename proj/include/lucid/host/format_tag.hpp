#pragma once

#include <map>
#include <string>

namespace lucid {

// Meta-information attached to host functions and transports. Two tags are
// equal exactly when their renderings are.
class FormatTag {
 public:
  FormatTag();  // language, os, compiler and version all "unknown"

  static FormatTag native();

  FormatTag& set(const std::string& key, std::string value);
  const std::string& get(const std::string& key) const;
  const std::map<std::string, std::string>& specs() const { return specs_; }

  std::string render() const;  // key=value;key=value in key order

  friend bool operator==(const FormatTag& a, const FormatTag& b) { return a.render() == b.render(); }

 private:
  std::map<std::string, std::string> specs_;
};

}  // namespace lucid
