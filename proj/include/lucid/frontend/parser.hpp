#pragma once

#include <optional>
#include <string_view>

#include "lucid/core/ast.hpp"

namespace lucid {

// Each dialect is a superset of the previous one: Indexical Lucid adds the
// stream operators, JLucid adds arrays and embed(), Objective Lucid adds
// dot-notation on records.
enum class Dialect { Gipl, Indexical, JLucid, Objective };

std::string_view to_string(Dialect d);

// Maps a segment language id (GIPL, INDEXICALLUCID, JLUCID, ...) to the
// dialect it is parsed with; nullopt for non-intensional languages.
std::optional<Dialect> dialect_for_language(std::string_view langId);

NodePtr parse(std::string_view text, Dialect dialect, int firstLine = 1);
NodePtr parse_gipl(std::string_view text, int firstLine = 1);
// Indexical Lucid together with its JLucid and Objective Lucid extensions.
NodePtr parse_indexical(std::string_view text, int firstLine = 1);

}  // namespace lucid
