#include "lucid/eduction/evaluator.hpp"

#include "lucid/core/error.hpp"
#include "lucid/eduction/operators.hpp"
#include "lucid/semantics/codec.hpp"

namespace lucid {

// A where clause or function body entered from a particular environment.
// Function environments hold the actual parameters unevaluated (E_fct
// substitutes expressions, not values).
struct Evaluator::Env {
  int scope;
  const Env* parent;
  std::vector<Thunk> formals;
  int id;
};

namespace {

class DepthGuard {
 public:
  DepthGuard(std::size_t& depth, std::size_t limit, const Node& n) : depth_(depth) {
    if (++depth_ > limit) {
      --depth_;
      fail(ErrorCode::DepthExceeded, "evaluation deeper than " + std::to_string(limit) + " levels", n.pos);
    }
  }
  ~DepthGuard() { --depth_; }

 private:
  std::size_t& depth_;
};

// Re-raises an error without a position at `n`.
template <typename F>
auto located(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.pos().known()) throw;
    throw Error(e.code(), e.message(), n.pos);
  }
}

}  // namespace

Evaluator::Evaluator(const EductionProgram& prog, int astIndex, Warehouse& wh, Dispatcher& dispatcher, HostIO& io,
                     EvalOptions opts)
    : prog_(prog), astIndex_(astIndex), wh_(wh), dispatcher_(dispatcher), io_(io), opts_(opts) {
  compute_taint();
}

Evaluator::~Evaluator() = default;

Value Evaluator::run() { return eval(*prog_.asts.at(astIndex_), nullptr, Context{}); }

// A variable is left out of the warehouse when evaluating it may run a
// mutable host function, directly, through another variable or function,
// or through an argument some call passes for a formal it reads.
void Evaluator::compute_taint() {
  const Dictionary& d = prog_.dictionary;
  auto mutable_ref = [&](const std::string& name) {
    const StRef* r = prog_.stref(name);
    return !r || !r->immutable;
  };
  std::set<std::string> mutableMethods;
  for (const auto& r : prog_.stRefs) {
    if (auto dot = r.name.find('.'); dot != std::string::npos && !r.immutable) {
      mutableMethods.insert(r.name.substr(dot + 1));
    }
  }
  std::set<const Node*> funcs;
  std::set<std::pair<const Node*, int>> formals;
  std::vector<const Node*> vars, fdecls, calls;
  walk(*prog_.asts[astIndex_], [&](const Node& n) {
    if (n.kind == NodeKind::VarDecl) vars.push_back(&n);
    if (n.kind == NodeKind::FuncDecl) fdecls.push_back(&n);
    if (n.kind == NodeKind::Call) calls.push_back(&n);
  });

  std::function<bool(const Node&)> reaches = [&](const Node& n) -> bool {
    switch (n.kind) {
      case NodeKind::Id: {
        const DictEntry* e = d.find_local(n.scope, n.name);
        if (!e) return false;
        if (e->kind == EntryKind::Var) return tainted_.count(e->def) > 0;
        if (e->kind == EntryKind::Formal) return formals.count({e->def, e->formalIndex}) > 0;
        return false;
      }
      case NodeKind::Call: {
        const Node& callee = *n.kids[0];
        const DictEntry* e = d.find_local(callee.scope, callee.name);
        if (e && e->kind == EntryKind::Func && funcs.count(e->def)) return true;
        if (e && (e->kind == EntryKind::FreeFun || e->kind == EntryKind::Class) && mutable_ref(callee.name)) {
          return true;
        }
        break;
      }
      case NodeKind::Embed:
        if (mutable_ref(n.name)) return true;
        break;
      case NodeKind::DotCall:
        if (mutableMethods.count(n.name)) return true;
        break;
      case NodeKind::Where:
        return reaches(*n.kids[0]);
      default:
        break;
    }
    for (const auto& k : n.kids) {
      if (reaches(*k)) return true;
    }
    for (const auto& s : n.subs) {
      if (reaches(*s)) return true;
    }
    return false;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (const Node* v : vars) {
      if (!tainted_.count(v) && reaches(*v->kids[0])) changed = tainted_.insert(v).second;
    }
    for (const Node* f : fdecls) {
      if (!funcs.count(f) && reaches(*f->kids[0])) changed = funcs.insert(f).second;
    }
    for (const Node* c : calls) {
      const Node& callee = *c->kids[0];
      const DictEntry* e = d.find_local(callee.scope, callee.name);
      if (!e || e->kind != EntryKind::Func) continue;
      int index = 0;
      auto mark = [&](const Node& actual) {
        if (!formals.count({e->def, index}) && reaches(actual)) changed = formals.insert({e->def, index}).second || changed;
        ++index;
      };
      for (const auto& s : c->subs) mark(*s);
      for (std::size_t i = 1; i < c->kids.size(); ++i) mark(*c->kids[i]);
    }
  }
}

const Evaluator::Env* Evaluator::scope_env(const Env* env, int scope, const Node& at) const {
  while (env && env->scope != scope) env = env->parent;
  if (!env) fail(ErrorCode::UndefinedIdentifier, "'" + at.name + "' is not visible here", at.pos);
  return env;
}

const Evaluator::Env* Evaluator::intern(const Node& creator, const Env* env, int scope, const Env* parent,
                                        std::vector<Thunk> formals) {
  auto& slot = envs_[{&creator, env}];
  if (!slot) {
    slot = std::make_unique<Env>(Env{scope, parent, std::move(formals), static_cast<int>(envs_.size())});
  }
  return slot.get();
}

Value Evaluator::eval(const Node& n, const Env* env, const Context& ctx) {
  DepthGuard guard(depth_, opts_.depthLimit, n);
  ++rules_;
  switch (n.kind) {
    case NodeKind::Literal:  // E_cid
      return n.literal;
    case NodeKind::Id:
      return identifier(n, env, ctx);
    case NodeKind::UnOp:  // E_op
      return located(n, [&] { return apply_unary(n.op, eval(*n.kids[0], env, ctx)); });
    case NodeKind::BinOp: {
      Value a = eval(*n.kids[0], env, ctx);
      Value b = eval(*n.kids[1], env, ctx);
      return located(n, [&] { return apply_binary(n.op, a, b); });
    }
    case NodeKind::If: {  // E_cT, E_cF
      Value c = eval(*n.kids[0], env, ctx);
      if (c.kind() != ValueKind::Bool) {
        fail(ErrorCode::TypeError, "condition must be bool, got " + std::string(to_string(c.kind())), n.kids[0]->pos);
      }
      return eval(*n.kids[c.as_bool() ? 1 : 2], env, ctx);
    }
    case NodeKind::Hash: {  // E_tag
      std::string dim = dimension(*n.kids[0], env, ctx);
      return located(n, [&] { return Value::integer(ctx.query(dim).value); });
    }
    case NodeKind::At: {  // E_at: dimension, then tag, then the body at the new point
      std::string dim = dimension(*n.kids[1], env, ctx);
      Value tag = eval(*n.kids[2], env, ctx);
      if (tag.kind() != ValueKind::Int) {
        fail(ErrorCode::TypeError, "a tag must be int, got " + std::string(to_string(tag.kind())), n.kids[2]->pos);
      }
      return eval(*n.kids[0], env, ctx.override(dim, Tag{tag.as_int()}));
    }
    case NodeKind::Where:
      return where(n, env, ctx);
    case NodeKind::Call:
      return call(n, env, ctx);
    case NodeKind::ArrayLit: {
      std::vector<Value> items;
      for (const auto& k : n.kids) items.push_back(eval(*k, env, ctx));
      GipsyType element = items.empty() ? GipsyType::of(TypeKind::Int) : items.front().type();
      return located(n, [&] { return Value::array(element, std::move(items)); });
    }
    case NodeKind::Index: {
      Value a = eval(*n.kids[0], env, ctx);
      for (std::size_t i = 1; i < n.kids.size(); ++i) {
        Value ix = eval(*n.kids[i], env, ctx);
        a = located(n, [&] {
          const auto& items = a.as_array().items;
          std::int64_t k = ix.as_int();
          if (k < 0 || k >= static_cast<std::int64_t>(items.size())) {
            fail(ErrorCode::IndexError,
                 "index " + std::to_string(k) + " outside [0, " + std::to_string(items.size()) + ")");
          }
          return items[static_cast<std::size_t>(k)];
        });
      }
      return a;
    }
    case NodeKind::DotField: {  // E_c-vid
      Value obj = eval(*n.kids[0], env, ctx);
      return located(n, [&] { return prog_.registry->field_get(obj, n.name); });
    }
    case NodeKind::DotCall: {  // E_c-fct
      Value obj = eval(*n.kids[0], env, ctx);
      if (obj.kind() != ValueKind::Rec) {
        fail(ErrorCode::TypeError, "method '" + n.name + "' called on " + std::string(to_string(obj.kind())), n.pos);
      }
      std::string name = obj.as_record().className + "." + n.name;
      if (!prog_.stref(name)) {
        fail(ErrorCode::UnknownMethod, obj.as_record().className + " has no method '" + n.name + "'", n.pos);
      }
      for (const auto& s : n.subs) dimension(*s, env, ctx);
      std::vector<Value> args{obj};
      for (std::size_t i = 1; i < n.kids.size(); ++i) args.push_back(eval(*n.kids[i], env, ctx));
      return functional(name, std::move(args), ctx, n);
    }
    case NodeKind::Embed: {
      std::vector<Value> args;
      for (const auto& k : n.kids) args.push_back(eval(*k, env, ctx));
      return functional(n.name, std::move(args), ctx, n);
    }
    default:
      fail(ErrorCode::Unsupported, std::string(to_string(n.kind)) + " cannot be evaluated", n.pos);
  }
}

Value Evaluator::identifier(const Node& n, const Env* env, const Context& ctx) {
  const DictEntry* e = prog_.dictionary.find_local(n.scope, n.name);
  if (!e) fail(ErrorCode::UndefinedIdentifier, "'" + n.name + "' is not defined", n.pos);
  switch (e->kind) {
    case EntryKind::Var:  // E_vid
      return demand_var(*e->def, scope_env(env, n.scope, n), ctx);
    case EntryKind::Formal: {
      const Env* fenv = scope_env(env, n.scope, n);
      const Thunk& t = fenv->formals.at(static_cast<std::size_t>(e->formalIndex));
      return eval(*t.expr, t.env, ctx);
    }
    case EntryKind::Dim:
      return Value::dim(n.name);
    default:
      fail(ErrorCode::TypeError, "'" + n.name + "' is not a value", n.pos);
  }
}

Value Evaluator::demand_var(const Node& decl, const Env* env, const Context& ctx) {
  const bool cacheable = tainted_.count(&decl) == 0;
  std::string key;
  if (cacheable) {
    key = std::to_string(astIndex_) + ":" + decl.name + "#" + std::to_string(decl.id) + "@" + std::to_string(env->id);
    if (auto hit = wh_.get(key, ctx)) return *hit;
  }
  Value v = eval(*decl.kids[0], env, ctx);
  if (cacheable) wh_.put(key, ctx, v);
  return v;
}

std::string Evaluator::dimension(const Node& n, const Env* env, const Context& ctx) {
  Value v = identifier(n, env, ctx);
  if (v.kind() != ValueKind::Dim) {
    fail(ErrorCode::NotADimension, "'" + n.name + "' is bound to " + std::string(to_string(v.kind())) +
                                       ", not a dimension", n.pos);
  }
  return v.as_dim();
}

Value Evaluator::call(const Node& n, const Env* env, const Context& ctx) {
  const Node& callee = *n.kids[0];
  const DictEntry* e = prog_.dictionary.find_local(callee.scope, callee.name);
  if (!e) fail(ErrorCode::UndefinedIdentifier, "'" + callee.name + "' is not defined", callee.pos);
  if (e->kind == EntryKind::Func) {  // E_fct
    const Node& fn = *e->def;
    std::vector<Thunk> actuals;
    for (const auto& s : n.subs) actuals.push_back({s.get(), env});
    for (std::size_t i = 1; i < n.kids.size(); ++i) actuals.push_back({n.kids[i].get(), env});
    const Env* defining = callee.scope == Dictionary::kGlobal ? nullptr : scope_env(env, callee.scope, callee);
    const Env* callEnv = intern(n, env, fn.scope, defining, std::move(actuals));
    return eval(*fn.kids[0], callEnv, ctx);
  }
  // E_ffid and construction: dimension arguments only select the point.
  for (const auto& s : n.subs) dimension(*s, env, ctx);
  std::vector<Value> args;
  for (std::size_t i = 1; i < n.kids.size(); ++i) args.push_back(eval(*n.kids[i], env, ctx));
  return functional(callee.name, std::move(args), ctx, n);
}

Value Evaluator::where(const Node& n, const Env* env, const Context& ctx) {  // E_w
  const Env* wenv = intern(n, env, n.scope, env, {});
  Context inner = ctx;
  for (const auto& d : n.decls) {
    if (d->kind != NodeKind::DimensionDecl) continue;
    for (const auto& name : d->names) inner = inner.override(name, Tag{0});  // Q_dim
  }
  return eval(*n.kids[0], wenv, inner);
}

Value Evaluator::functional(const std::string& name, std::vector<Value> args, const Context& ctx, const Node& at) {
  const StRef* ref = prog_.stref(name);
  if (!ref) fail(ErrorCode::UnresolvedFunction, "'" + name + "' is not linked", at.pos);
  std::string key;
  if (ref->immutable) {
    key = "fn:" + name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) key += (i ? "," : "") + encode_value(args[i]).dump();
    key += ")";
    if (auto hit = wh_.get(key, ctx)) return *hit;
  }
  Demand dm{Demand::Kind::Functional, name, std::move(args), ctx, 0};
  FunctionalResult r = located(at, [&] { return dispatcher_.dispatch(std::move(dm)); });
  for (const auto& line : r.output) io_.print(line);
  if (ref->immutable) wh_.put(key, ctx, r.value);
  return r.value;
}

}  // namespace lucid
