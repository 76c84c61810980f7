#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lucid/core/error.hpp"
#include "lucid/eduction/dispatch.hpp"
#include "lucid/eduction/evaluator.hpp"
#include "lucid/eduction/warehouse.hpp"
#include "lucid/semantics/program.hpp"

namespace lucid {

struct RunOptions {
  std::size_t warehouseCapacity = Warehouse::kUnbounded;
  bool concurrent = false;  // evaluate the trees of a program on separate threads
  std::size_t depthLimit = 100000;
  unsigned socketWorkers = 2;
  std::optional<CpKind> cpKind;  // overrides the program's choice
};

struct AstResult {
  int astIndex = 0;
  std::optional<Value> value;
  std::optional<Error> error;
  std::vector<std::string> output;  // lines printed by host code
  std::uint64_t ruleApplications = 0;
};

struct RunReport {
  std::vector<AstResult> results;  // by astIndex
  WarehouseStats warehouse;
  WorkerStats workers;
  std::uint64_t ruleApplications = 0;

  bool ok() const;
  // Per tree: its printed lines, then `index: value` or
  // `index: error: Code: message`.
  std::string text() const;
};

// Runs `fn` on a thread with a stack large enough for deep evaluations and
// rethrows whatever it throws.
void run_on_large_stack(const std::function<void()>& fn, std::size_t bytes = std::size_t{1} << 30);

std::shared_ptr<CommunicationProcedure> make_cp(CpKind kind, std::shared_ptr<const HostRegistry> registry,
                                                unsigned workers = 2);

// Evaluates every tree of `prog` under the empty context.
RunReport run(const EductionProgram& prog, const RunOptions& opts = {});

// The same with a caller-owned warehouse and transport.
RunReport run(const EductionProgram& prog, Warehouse& wh, std::shared_ptr<CommunicationProcedure> cp,
              const RunOptions& opts = {});

}  // namespace lucid
