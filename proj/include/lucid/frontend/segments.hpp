#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucid/core/dictionary.hpp"
#include "lucid/core/types.hpp"

namespace lucid {

struct EmbedBinding {
  std::string langId;  // may be empty
  std::string uri;
  std::string remoteName;  // may be empty

  friend bool operator==(const EmbedBinding&, const EmbedBinding&) = default;
};

// A declared imperative function, as written under #funcdecl (or derived
// from a #NATIVE export line). Types are Lucid-side.
struct Prototype {
  std::string name;
  bool immutable = false;
  GipsyType returnType;
  std::vector<GipsyType> paramTypes;
  std::optional<EmbedBinding> embed;
  SourcePos pos;

  std::string signature() const;  // (int,double)->bool

  friend bool operator==(const Prototype& a, const Prototype& b) {
    return a.name == b.name && a.immutable == b.immutable && a.returnType == b.returnType &&
           a.paramTypes == b.paramTypes && a.embed == b.embed;
  }
};

struct Segment {
  std::string langId;  // without the leading '#'
  std::string body;
  int startLine = 1;  // source line of the first body line
};

struct SegmentedProgram {
  std::vector<Prototype> funcDecls;
  std::vector<std::string> typeDecls;
  std::vector<Segment> segments;
  // The raw #funcdecl / #typedecl sections and whatever preceded the first
  // marker, kept so the source can be put back together.
  std::vector<Segment> declSections;
  std::string preamble;
};

// With a non-empty `valid` list every language not on it is rejected;
// otherwise only languages on `invalid` are.
struct SegmentFilter {
  std::vector<std::string> valid;
  std::vector<std::string> invalid;

  bool allows(std::string_view langId) const;
};

SegmentedProgram parse_segments(std::string_view source, std::string_view defaultLang = "INDEXICALLUCID",
                                const SegmentFilter& filter = {});

// One prototype declaration, e.g. `immutable int get42();` (without the
// trailing semicolon is fine too).
Prototype parse_prototype(std::string_view text, SourcePos pos = {});

bool is_segment_marker(std::string_view line);

// Source text rebuilt from the parsed sections, markers included.
std::string reassemble(const SegmentedProgram& prog);

// FreeFun entries for prototypes, Class entries for declared types, all in
// the global scope. DuplicatePrototype when a name is declared twice.
Dictionary build_stub_dictionary(const SegmentedProgram& prog);

}  // namespace lucid
