#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lucid/core/ast.hpp"
#include "lucid/core/dictionary.hpp"
#include "lucid/host/registry.hpp"

namespace lucid {

enum class CpKind { Null, Socket };

std::string_view to_string(CpKind k);
CpKind cp_kind_from(std::string_view text);

// A linked host entry point: a free function (`sin`), a record method
// (`Car.move`) or a record constructor (`Car`).
struct StRef {
  std::string name;
  bool immutable = false;
  GipsyType returnType;
  std::vector<GipsyType> paramTypes;

  friend bool operator==(const StRef&, const StRef&) = default;
};

struct IdentifierContext {
  std::string name;
  int astIndex = 0;

  friend bool operator==(const IdentifierContext&, const IdentifierContext&) = default;
};

// The compiled, linked unit handed from the compiler to the engine.
struct EductionProgram {
  std::vector<NodePtr> asts;
  Dictionary dictionary;
  std::vector<StRef> stRefs;  // sorted by name
  CpKind cpKind = CpKind::Null;
  std::vector<IdentifierContext> ics;
  std::shared_ptr<const HostRegistry> registry;

  const StRef* stref(std::string_view name) const;
};

// Same trees (scope annotations included), same dictionary rows, stRefs,
// transport and identifier contexts.
bool structurally_equal(const EductionProgram& a, const EductionProgram& b);

}  // namespace lucid
