#pragma once

#include <filesystem>
#include <memory>
#include <vector>

#include "lucid/frontend/segments.hpp"
#include "lucid/host/registry.hpp"
#include "lucid/semantics/program.hpp"

namespace lucid {

struct LinkOptions {
  std::filesystem::path baseDir = ".";  // where relative file:// URIs point
  CpKind cpKind = CpKind::Null;
};

// Matches the prototypes and type declarations of `prog` against the
// registry, adds the denormalized record members (Car.x, Car.move) to the
// global scope, analyzes every tree against the result and resolves the
// embed() calls in them. The trees are annotated in place.
EductionProgram link(const SegmentedProgram& prog, std::vector<NodePtr> asts,
                     std::shared_ptr<const HostRegistry> registry, const LinkOptions& opts = {});

// Lucid-side view of a host type; void stays void.
GipsyType lucid_side(const HostType& host);

// Checks every stRef of `prog` against its registry: UnresolvedFunction for
// missing functions and methods, UnresolvedType for missing records,
// SignatureMismatch when the types disagree.
void verify_strefs(const EductionProgram& prog);

}  // namespace lucid
