#include "lucid/semantics/compiler.hpp"

#include "lucid/core/error.hpp"
#include "lucid/host/manifest.hpp"
#include "lucid/semantics/linker.hpp"
#include "lucid/translator/translator.hpp"

namespace lucid {

std::string Warning::diagnostic(std::string_view file) const {
  std::string out(file);
  if (pos.known()) out += ":" + std::to_string(pos.line) + ":" + std::to_string(pos.col);
  return out + ": warning: " + message;
}

namespace {

bool is_opaque_host_language(std::string_view lang) { return lang == "JAVA" || lang == "CPP" || lang == "C++"; }

}  // namespace

CompileResult compile(std::string_view source, std::shared_ptr<const HostRegistry> registry,
                      const CompileOptions& opts) {
  std::string defaultLang(to_string(opts.dialect.value_or(Dialect::Indexical)));
  SegmentedProgram prog = parse_segments(source, defaultLang, opts.filter);

  CompileResult out;
  std::vector<NodePtr> asts;
  for (const auto& seg : prog.segments) {
    SourcePos marker{seg.startLine - 1, 1};
    if (seg.langId == "NATIVE") {
      for (const auto& entry : parse_manifest(seg.body, seg.startLine)) {
        Prototype p = prototype_of(entry);
        p.pos = {entry.line, 1};
        prog.funcDecls.push_back(std::move(p));
      }
      continue;
    }
    if (is_opaque_host_language(seg.langId)) {
      out.warnings.push_back(
          {marker, seg.langId + " segment is not compiled; its functions are bound from the host registry"});
      continue;
    }
    auto dialect = dialect_for_language(seg.langId);
    if (!dialect) fail(ErrorCode::UnsupportedLanguage, "no compiler for #" + seg.langId + " segments", marker);

    NodePtr ast = parse(seg.body, *dialect, seg.startLine);
    if (opts.translate) {
      TranslateReport report;
      ast = translate(*ast, &report);
      if (!report.implicitDimension.empty()) {
        out.warnings.push_back({ast->pos, "operators without a dimension are bound to the implicit dimension '" +
                                              report.implicitDimension + "'"});
      }
    }
    asts.push_back(std::move(ast));
  }
  if (asts.empty()) fail(ErrorCode::CompileError, "the program has no intensional segment");

  out.program = link(prog, std::move(asts), std::move(registry), {opts.baseDir, opts.cpKind});
  if (opts.warningsAsErrors && !out.warnings.empty()) {
    fail(ErrorCode::CompileError, "warning treated as error: " + out.warnings.front().message,
         out.warnings.front().pos);
  }
  return out;
}

}  // namespace lucid
