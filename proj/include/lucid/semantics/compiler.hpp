#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucid/frontend/parser.hpp"
#include "lucid/frontend/segments.hpp"
#include "lucid/host/registry.hpp"
#include "lucid/semantics/program.hpp"

namespace lucid {

struct CompileOptions {
  // Dialect of a source without segment markers; Indexical Lucid if unset.
  std::optional<Dialect> dialect;
  bool translate = true;
  bool warningsAsErrors = false;
  SegmentFilter filter;
  std::filesystem::path baseDir = ".";
  CpKind cpKind = CpKind::Null;
};

struct Warning {
  SourcePos pos;
  std::string message;

  std::string diagnostic(std::string_view file) const;  // file:line:col: warning: message
};

struct CompileResult {
  EductionProgram program;
  std::vector<Warning> warnings;
};

// Segments, parses and translates every intensional segment, takes the
// prototypes of #funcdecl and #NATIVE sections, and links the lot against
// `registry`.
CompileResult compile(std::string_view source, std::shared_ptr<const HostRegistry> registry,
                      const CompileOptions& opts = {});

}  // namespace lucid
