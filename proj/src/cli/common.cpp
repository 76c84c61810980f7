#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lucid/cli/cli.hpp"
#include "lucid/cli/detail.hpp"
#include "lucid/core/error.hpp"
#include "lucid/core/text.hpp"
#include "lucid/eduction/runner.hpp"
#include "lucid/semantics/compiler.hpp"
#include "lucid/semantics/serialize.hpp"

namespace lucid {

bool debug_from_env() {
  const char* v = std::getenv("GIPSY_DEBUG");
  return v && std::string_view(v) == "1";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) fail(ErrorCode::IoError, "cannot write " + path.string());
}

std::string regression_transcript(const std::filesystem::path& source, std::optional<Dialect> dialect, bool run) {
  const std::string name = source.filename().string();
  std::string out = "== compile ==\n";
  std::optional<EductionProgram> prog;
  auto registry = HostRegistry::with_builtins();
  try {
    CompileOptions opts;
    opts.dialect = dialect;
    opts.baseDir = source.parent_path();
    CompileResult r = compile(read_text(source), registry, opts);
    for (const auto& w : r.warnings) out += w.diagnostic(name) + "\n";
    prog = deserialize(serialize(r.program), registry);
    out += "ok\n";
  } catch (const Error& e) {
    out += e.diagnostic(name) + "\n";
  }
  if (run && prog) out += "== run ==\n" + lucid::run(*prog).text();
  return out;
}

namespace {

enum class Edit { Keep, Del, Add };

}  // namespace

std::string unified_diff(const std::string& expected, const std::string& current, const std::string& expectedName,
                         const std::string& currentName) {
  if (expected == current) return "";
  auto lines = [](const std::string& s) {
    std::vector<std::string> v;
    for (auto part : split(s, '\n')) v.emplace_back(part);
    if (!v.empty() && v.back().empty()) v.pop_back();
    return v;
  };
  const auto a = lines(expected);
  const auto b = lines(current);
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  struct Step {
    Edit edit;
    std::size_t i, j;  // positions in a and b before the step
  };
  std::vector<Step> script;
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      script.push_back({Edit::Keep, i++, j++});
    } else if (i < n && (j == m || lcs[i + 1][j] >= lcs[i][j + 1])) {
      script.push_back({Edit::Del, i++, j});
    } else {
      script.push_back({Edit::Add, i, j++});
    }
  }

  constexpr std::size_t kContext = 3;
  std::string out = "--- " + expectedName + "\n+++ " + currentName + "\n";
  std::size_t k = 0;
  while (k < script.size()) {
    if (script[k].edit == Edit::Keep) {
      ++k;
      continue;
    }
    std::size_t start = k >= kContext ? k - kContext : 0;
    // A hunk runs until more than 2 * kContext lines in a row are unchanged.
    std::size_t last = k;
    for (std::size_t t = k; t < script.size() && t <= last + 2 * kContext; ++t) {
      if (script[t].edit != Edit::Keep) last = t;
    }
    std::size_t end = std::min(last + 1 + kContext, script.size());
    std::size_t aLen = 0, bLen = 0;
    std::string body;
    for (std::size_t t = start; t < end; ++t) {
      const Step& s = script[t];
      if (s.edit == Edit::Keep) {
        body += " " + a[s.i] + "\n";
        ++aLen;
        ++bLen;
      } else if (s.edit == Edit::Del) {
        body += "-" + a[s.i] + "\n";
        ++aLen;
      } else {
        body += "+" + b[s.j] + "\n";
        ++bLen;
      }
    }
    std::size_t aStart = script[start].i + (aLen ? 1 : 0);
    std::size_t bStart = script[start].j + (bLen ? 1 : 0);
    out += "@@ -" + std::to_string(aStart) + "," + std::to_string(aLen) + " +" + std::to_string(bStart) + "," +
           std::to_string(bLen) + " @@\n" + body;
    k = end;
  }
  return out;
}

}  // namespace lucid
