#pragma once

#include <string>

#include "lucid/core/error.hpp"
#include "lucid/eduction/runner.hpp"
#include "lucid/host/registry.hpp"
#include "lucid/semantics/compiler.hpp"

namespace lucid::testing {

inline EductionProgram compile_text(const std::string& src, std::optional<Dialect> dialect = std::nullopt,
                                    std::shared_ptr<const HostRegistry> registry = HostRegistry::with_builtins()) {
  CompileOptions opts;
  opts.dialect = dialect;
  return compile(src, std::move(registry), opts).program;
}

// The value of the first tree; rethrows its evaluation error.
inline Value eval_text(const std::string& src, std::optional<Dialect> dialect = std::nullopt) {
  RunReport r = run(compile_text(src, dialect));
  if (r.results[0].error) throw *r.results[0].error;
  return *r.results[0].value;
}

inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an error");
}

}  // namespace lucid::testing
