#pragma once

#include "lucid/core/ast.hpp"
#include "lucid/core/dictionary.hpp"

namespace lucid {

// Opens scopes for the where clauses and function bodies of `root` below
// the global scope of `dict`, defines their dimensions, variables,
// functions and formals, and annotates every identifier with the scope it
// resolves in. Nodes are numbered in preorder afterwards.
//
// The tree must be in core form: dialect operators left in it are
// Unsupported, as are the declaration forms the evaluator cannot run.
void analyze_into(Node& root, Dictionary& dict);

// The stub dictionary extended with the scopes of `root`.
Dictionary analyze(Node& root, const Dictionary& stubs);

}  // namespace lucid
