#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lucid/eduction/dispatch.hpp"
#include "lucid/eduction/warehouse.hpp"
#include "lucid/semantics/program.hpp"

namespace lucid {

struct EvalOptions {
  std::size_t depthLimit = 100000;
};

// Evaluates one tree of a linked program by the E rules. Variables are
// demanded through the warehouse, host functions through the dispatcher.
//
// Warehouse keys name variables by the environment they were defined in,
// and environments are numbered per evaluator; a warehouse may be shared by
// the evaluators of different trees of one program, or by repeated runs of
// one evaluator, but not by unrelated evaluators of the same tree.
class Evaluator {
 public:
  Evaluator(const EductionProgram& prog, int astIndex, Warehouse& wh, Dispatcher& dispatcher, HostIO& io,
            EvalOptions opts = {});
  ~Evaluator();

  // The tree under the empty context. Deeply recursive programs need a
  // large stack; see run_on_large_stack.
  Value run();

  std::uint64_t rule_applications() const { return rules_; }
  // VarDecls whose evaluation may reach a mutable host function.
  const std::set<const Node*>& uncacheable() const { return tainted_; }

 private:
  struct Env;
  struct Thunk {
    const Node* expr;
    const Env* env;
  };

  Value eval(const Node& n, const Env* env, const Context& ctx);
  Value identifier(const Node& n, const Env* env, const Context& ctx);
  Value demand_var(const Node& decl, const Env* env, const Context& ctx);
  Value call(const Node& n, const Env* env, const Context& ctx);
  Value where(const Node& n, const Env* env, const Context& ctx);
  Value functional(const std::string& name, std::vector<Value> args, const Context& ctx, const Node& at);
  std::string dimension(const Node& n, const Env* env, const Context& ctx);
  const Env* scope_env(const Env* env, int scope, const Node& at) const;
  const Env* intern(const Node& creator, const Env* env, int scope, const Env* parent, std::vector<Thunk> formals);
  void compute_taint();

  const EductionProgram& prog_;
  int astIndex_;
  Warehouse& wh_;
  Dispatcher& dispatcher_;
  HostIO& io_;
  EvalOptions opts_;
  std::uint64_t rules_ = 0;
  std::size_t depth_ = 0;
  std::map<std::pair<const Node*, const Env*>, std::unique_ptr<Env>> envs_;
  std::set<const Node*> tainted_;
};

}  // namespace lucid
