#pragma once

#include <string>

#include "lucid/core/ast.hpp"

namespace lucid {

// Fully parenthesized canonical text. Reparsing it (in the richest dialect
// the tree uses) yields a structurally identical tree.
std::string print(const Node& node);

// The same text laid out with one declaration per line, for listings.
std::string print_pretty(const Node& node);

}  // namespace lucid
