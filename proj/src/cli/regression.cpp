#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>

#include "lucid/cli/cli.hpp"
#include "lucid/cli/detail.hpp"
#include "lucid/core/error.hpp"

namespace lucid {

namespace {

namespace fs = std::filesystem;

struct Suite {
  const char* dir;
  std::optional<Dialect> dialect;
};

constexpr Suite kGipl{"gipl", Dialect::Gipl};
constexpr Suite kIndexical{"indexical", Dialect::Indexical};
constexpr Suite kJLucid{"jlucid", Dialect::JLucid};
constexpr Suite kObjective{"objective", Dialect::Objective};
constexpr Suite kGipsy{"gipsy", std::nullopt};

struct Case {
  Suite suite;
  fs::path source;
  std::string name;  // suite/case
  bool pass = false;
  std::string report;
};

// The expected file cut down to the sections the current run produced.
std::string comparable(const std::string& expected, bool run) {
  if (run) return expected;
  auto at = expected.find("== run ==\n");
  return at == std::string::npos ? expected : expected.substr(0, at);
}

void check(Case& c, bool run) {
  const fs::path dir = c.source.parent_path();
  const std::string file = c.source.stem().string() + ".out";
  std::string current;
  try {
    current = regression_transcript(c.source, c.suite.dialect, run);
    fs::create_directories(dir / "current");
    write_text(dir / "current" / file, current);
  } catch (const std::exception& e) {
    c.report = std::string("  ") + e.what() + "\n";
    return;
  }
  std::string expected;
  try {
    expected = comparable(read_text(dir / "expected" / file), run);
  } catch (const Error&) {
    c.report = "  no expected output at " + (dir / "expected" / file).string() + "\n";
    return;
  }
  c.report = unified_diff(expected, current, "expected/" + file, "current/" + file);
  c.pass = c.report.empty();
}

}  // namespace

int regression_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  bool sequential = false, parallel = false, gipl = false, indexical = false, gipsy = false, gee = false,
       all = false, debug = false;
  std::string directory = "tests";
  CLI::App app{"Compiles and runs the program corpus and compares the results with the expected ones.",
               "regression"};
  app.add_flag("--sequential", sequential, "Check one case at a time (the default)");
  app.add_flag("--parallel", parallel, "Check cases concurrently");
  app.add_flag("--gipl", gipl, "The GIPL suite");
  app.add_flag("--indexical", indexical, "The Indexical Lucid suite");
  app.add_flag("--gipsy", gipsy, "The JLucid, Objective Lucid and hybrid suites");
  app.add_flag("--gee", gee, "Run the compiled programs too");
  app.add_flag("--all", all, "Every suite, compiled and run (the default)");
  app.add_option("--directory", directory, "Directory holding the suites");
  app.add_flag("--debug", debug, "List passing cases as well");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "regression: " << e.what() << "\n";
    return kExitUsage;
  }
  if (sequential && parallel) {
    err << "regression: --sequential and --parallel exclude each other\n";
    return kExitUsage;
  }
  debug = debug || debug_from_env();
  if (!gipl && !indexical && !gipsy) all = true;
  const bool run = all || gee;

  std::vector<Suite> suites;
  if (all || gipl) suites.push_back(kGipl);
  if (all || indexical) suites.push_back(kIndexical);
  if (all || gipsy) {
    suites.push_back(kJLucid);
    suites.push_back(kObjective);
    suites.push_back(kGipsy);
  }

  std::vector<Case> cases;
  bool ok = true;
  for (const auto& s : suites) {
    fs::path dir = fs::path(directory) / s.dir;
    if (!fs::is_directory(dir)) {
      err << "regression: missing suite directory " << dir.string() << "\n";
      ok = false;
      continue;
    }
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".ipl") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) cases.push_back({s, f, std::string(s.dir) + "/" + f.stem().string(), false, ""});
  }

  if (parallel) {
    std::atomic<std::size_t> next{0};
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < cases.size();) check(cases[i], run);
      });
    }
    for (auto& t : pool) t.join();
  } else {
    for (auto& c : cases) check(c, run);
  }

  std::size_t passed = 0;
  for (const auto& c : cases) {
    if (c.pass) {
      ++passed;
      if (debug) out << "PASS " << c.name << "\n";
    } else {
      out << "FAIL " << c.name << "\n" << c.report;
    }
  }
  out << passed << " passed, " << cases.size() - passed << " failed\n";
  return ok && passed == cases.size() ? kExitOk : kExitFailure;
}

}  // namespace lucid
