#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "lucid/host/registry.hpp"
#include "lucid/semantics/program.hpp"

namespace lucid {

// The .gipsy text: version, asts, dictionary, strefs, cpkind, ics, in that
// order. Equal programs serialize to identical bytes.
std::string serialize(const EductionProgram& prog);

// Rebuilds the dictionary by analyzing the trees again (it must agree with
// the stored one) and re-binds the stRefs against `registry`. FormatError
// for malformed or inconsistent text.
EductionProgram deserialize(std::string_view text, std::shared_ptr<const HostRegistry> registry);

}  // namespace lucid
