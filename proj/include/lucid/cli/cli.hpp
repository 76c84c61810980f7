#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lucid/frontend/parser.hpp"

namespace lucid {

// Exit codes shared by the tools.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int gipc_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int gee_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int regression_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// True when GIPSY_DEBUG=1 is set.
bool debug_from_env();

// One corpus case as the regression harness records it: the compile
// section (warnings, then the error or "ok") and, when `run` is set and
// compilation succeeded, the run section. The program is evaluated after a
// round trip through the .gipsy text.
std::string regression_transcript(const std::filesystem::path& source, std::optional<Dialect> dialect, bool run);

// Line-based unified diff, three lines of context; empty when equal.
std::string unified_diff(const std::string& expected, const std::string& current, const std::string& expectedName,
                         const std::string& currentName);

}  // namespace lucid
