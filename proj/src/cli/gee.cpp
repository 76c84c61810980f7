#include <CLI11.hpp>
#include <iostream>
#include <mutex>
#include <sstream>

#include "lucid/cli/cli.hpp"
#include "lucid/cli/detail.hpp"
#include "lucid/core/error.hpp"
#include "lucid/eduction/runner.hpp"
#include "lucid/host/manifest.hpp"
#include "lucid/semantics/serialize.hpp"

namespace lucid {

int gee_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> inputs, registries;
  bool useStdin = false, threaded = false, socket = false, debug = false;
  std::string rmiAnalog;
  std::size_t capacity = Warehouse::kUnbounded;
  bool rmi = false, jini = false, dcom = false, corba = false, dfg = false;

  CLI::App app{"Evaluates compiled GIPSY programs (.gipsy).", "gee"};
  app.add_option("files", inputs, "Compiled programs");
  app.add_flag("--stdin", useStdin, "Read a compiled program from standard input");
  app.add_flag("--threaded", threaded, "Evaluate the trees of a program on separate threads");
  app.add_flag("--socket", socket, "Send host-function demands to loopback socket workers");
  app.add_option("--rmi-analog", rmiAnalog, "Remote transport; only 'socket' exists")
      ->check(CLI::IsMember({"socket"}));
  app.add_flag("--debug", debug, "Report warehouse and worker statistics on the diagnostic stream");
  app.add_option("--warehouse-capacity", capacity, "Most values kept in the warehouse; 0 disables it");
  app.add_option("--registry", registries, "Manifest of host functions to register");
  app.add_flag("--rmi", rmi)->group("");
  app.add_flag("--jini", jini)->group("");
  app.add_flag("--dcom", dcom)->group("");
  app.add_flag("--corba", corba)->group("");
  app.add_flag("--dfg", dfg)->group("");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gee: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto [set, flag] : {std::pair{rmi, "--rmi"}, {jini, "--jini"}, {dcom, "--dcom"}, {corba, "--corba"},
                           {dfg, "--dfg"}}) {
    if (set) {
      err << "gee: " << flag << " is unsupported in this build\n";
      return kExitUsage;
    }
  }
  debug = debug || debug_from_env();
  if (inputs.empty() && !useStdin) {
    err << "gee: no input files (use --stdin to read standard input)\n";
    return kExitUsage;
  }

  std::shared_ptr<HostRegistry> registry = HostRegistry::with_builtins();
  try {
    for (const auto& r : registries) load_registry_manifest(*registry, r);
  } catch (const Error& e) {
    err << "gee: " << e.what() << "\n";
    return kExitFailure;
  }

  RunOptions opts;
  opts.warehouseCapacity = capacity;
  opts.concurrent = threaded;
  if (socket || !rmiAnalog.empty()) opts.cpKind = CpKind::Socket;

  std::mutex outMu;
  bool ok = true;
  auto run_text = [&](const std::string& label, const std::string& text) {
    try {
      EductionProgram prog = deserialize(text, registry);
      RunReport report = run(prog, opts);
      {
        std::lock_guard lock(outMu);
        out << report.text() << std::flush;
      }
      if (debug) {
        err << "debug: " << label << ": warehouse hits=" << report.warehouse.hits
            << " misses=" << report.warehouse.misses << " puts=" << report.warehouse.puts
            << " evictions=" << report.warehouse.evictions << " rules=" << report.ruleApplications << "\n";
        for (const auto& [id, s] : report.workers) {
          err << "debug: " << id << " " << to_string(s.liveness) << " served=" << s.demandsServed
              << " mean=" << s.mean_response_ms() << "ms\n";
        }
      }
      ok = report.ok() && ok;
    } catch (const Error& e) {
      err << label << ": " << e.what() << "\n";
      ok = false;
    }
  };
  if (useStdin) {
    std::ostringstream s;
    s << std::cin.rdbuf();
    run_text("<stdin>", s.str());
  }
  for (const auto& input : inputs) {
    std::string text;
    try {
      text = read_text(input);
    } catch (const Error& e) {
      err << input << ": " << e.what() << "\n";
      ok = false;
      continue;
    }
    run_text(input, text);
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace lucid
