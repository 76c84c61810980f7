#include "lucid/semantics/program.hpp"

#include <algorithm>

#include "lucid/core/error.hpp"

namespace lucid {

std::string_view to_string(CpKind k) { return k == CpKind::Socket ? "socket" : "null"; }

CpKind cp_kind_from(std::string_view text) {
  if (text == "null") return CpKind::Null;
  if (text == "socket") return CpKind::Socket;
  fail(ErrorCode::FormatError, "unknown communication procedure '" + std::string(text) + "'");
}

const StRef* EductionProgram::stref(std::string_view name) const {
  auto it = std::lower_bound(stRefs.begin(), stRefs.end(), name,
                             [](const StRef& r, std::string_view n) { return r.name < n; });
  return it != stRefs.end() && it->name == name ? &*it : nullptr;
}

bool structurally_equal(const EductionProgram& a, const EductionProgram& b) {
  if (a.asts.size() != b.asts.size()) return false;
  for (std::size_t i = 0; i < a.asts.size(); ++i) {
    if (!structural_equal(*a.asts[i], *b.asts[i], true)) return false;
  }
  return a.dictionary.rows() == b.dictionary.rows() && a.stRefs == b.stRefs && a.cpKind == b.cpKind &&
         a.ics == b.ics;
}

}  // namespace lucid
