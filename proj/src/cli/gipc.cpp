#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "lucid/cli/cli.hpp"
#include "lucid/cli/detail.hpp"
#include "lucid/core/error.hpp"
#include "lucid/eduction/runner.hpp"
#include "lucid/semantics/compiler.hpp"
#include "lucid/semantics/serialize.hpp"

namespace lucid {

namespace {

struct GipcConfig {
  std::vector<std::string> inputs;
  bool useStdin = false;
  bool gipl = false, indexical = false, jlucid = false, objective = false;
  bool translate = false, disableTranslate = false;
  bool warningsAsErrors = false;
  bool gee = false;
  bool debug = false;
};

// Compiles one source; returns false after reporting an error.
bool compile_one(const std::string& label, const std::string& source, const std::filesystem::path& baseDir,
                 const std::filesystem::path& output, const CompileOptions& opts, const GipcConfig& cfg,
                 std::ostream& out, std::ostream& err) {
  auto registry = HostRegistry::with_builtins();
  CompileResult r;
  try {
    CompileOptions o = opts;
    o.baseDir = baseDir;
    r = compile(source, registry, o);
  } catch (const Error& e) {
    err << e.diagnostic(label) << "\n";
    return false;
  }
  for (const auto& w : r.warnings) err << w.diagnostic(label) << "\n";
  try {
    write_text(output, serialize(r.program));
  } catch (const Error& e) {
    err << label << ": " << e.what() << "\n";
    return false;
  }
  if (cfg.debug) {
    err << "debug: " << label << ": " << r.program.asts.size() << " tree(s), " << r.program.dictionary.rows().size()
        << " dictionary entries, " << r.program.stRefs.size() << " host reference(s) -> " << output.string() << "\n";
  }
  if (!cfg.gee) return true;
  RunReport report = run(r.program);
  out << report.text() << std::flush;
  if (cfg.debug) {
    err << "debug: warehouse hits=" << report.warehouse.hits << " misses=" << report.warehouse.misses
        << " puts=" << report.warehouse.puts << " rules=" << report.ruleApplications << "\n";
  }
  return report.ok();
}

}  // namespace

int gipc_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  GipcConfig cfg;
  CLI::App app{"Compiles GIPSY programs (.ipl) into .gipsy files.", "gipc"};
  app.add_option("files", cfg.inputs, "Source files; each is compiled as an independent program");
  app.add_flag("--stdin", cfg.useStdin, "Read the program from standard input");
  app.add_flag("-G,--gipl", cfg.gipl, "Treat unmarked sources as GIPL");
  app.add_flag("-S,--indexical", cfg.indexical, "Treat unmarked sources as Indexical Lucid (the default)");
  app.add_flag("--jlucid", cfg.jlucid, "Treat unmarked sources as JLucid");
  app.add_flag("--objective", cfg.objective, "Treat unmarked sources as Objective Lucid");
  app.add_flag("-T,--translate", cfg.translate, "Translate dialect operators into @ and # (the default)");
  app.add_flag("--disable-translate", cfg.disableTranslate, "Do not translate; dialect operators become errors");
  app.add_flag("--warnings-as-errors", cfg.warningsAsErrors, "Fail on any warning");
  app.add_flag("--gee", cfg.gee, "Run each program after compiling it");
  app.add_flag("--debug", cfg.debug, "Report compilation details on the diagnostic stream");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gipc: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.debug = cfg.debug || debug_from_env();

  int forced = cfg.gipl + cfg.indexical + cfg.jlucid + cfg.objective;
  if (forced > 1) {
    err << "gipc: conflicting dialect options; give at most one of --gipl, --indexical, --jlucid, --objective\n";
    return kExitUsage;
  }
  if (cfg.translate && cfg.disableTranslate) {
    err << "gipc: --translate and --disable-translate exclude each other\n";
    return kExitUsage;
  }
  if (cfg.inputs.empty() && !cfg.useStdin) {
    err << "gipc: no input files (use --stdin to read standard input)\n";
    return kExitUsage;
  }

  CompileOptions opts;
  if (cfg.gipl) opts.dialect = Dialect::Gipl;
  if (cfg.indexical) opts.dialect = Dialect::Indexical;
  if (cfg.jlucid) opts.dialect = Dialect::JLucid;
  if (cfg.objective) opts.dialect = Dialect::Objective;
  opts.translate = !cfg.disableTranslate;
  opts.warningsAsErrors = cfg.warningsAsErrors;

  bool ok = true;
  if (cfg.useStdin) {
    std::ostringstream s;
    s << std::cin.rdbuf();
    ok = compile_one("<stdin>", s.str(), ".", "stdin.gipsy", opts, cfg, out, err) && ok;
  }
  for (const auto& input : cfg.inputs) {
    std::filesystem::path path(input);
    std::string source;
    try {
      source = read_text(path);
    } catch (const Error& e) {
      err << input << ": " << e.what() << "\n";
      ok = false;
      continue;
    }
    std::filesystem::path output = path;
    output.replace_extension(".gipsy");
    ok = compile_one(input, source, path.parent_path(), output, opts, cfg, out, err) && ok;
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace lucid
