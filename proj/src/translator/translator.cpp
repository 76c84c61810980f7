#include "lucid/translator/translator.hpp"

#include <vector>

namespace lucid {

std::string RewriteEnv::fresh_id(std::string_view hint) {
  auto it = counters_.find(hint);
  if (it == counters_.end()) it = counters_.emplace(std::string(hint), 0).first;
  for (;;) {
    std::string name = std::string(hint) + "__" + std::to_string(it->second++);
    if (taken_.insert(name).second) return name;
  }
}

std::set<std::string> names_in(const Node& root) {
  std::set<std::string> out;
  walk(root, [&](const Node& n) {
    if (!n.name.empty()) out.insert(n.name);
    if (!n.opDim.empty()) out.insert(n.opDim);
    out.insert(n.names.begin(), n.names.end());
    out.insert(n.dims.begin(), n.dims.end());
  });
  return out;
}

bool has_dialect_ops(const Node& root) {
  bool found = false;
  walk(root, [&](const Node& n) {
    if ((n.kind == NodeKind::UnOp || n.kind == NodeKind::BinOp) && is_dialect_op(n.op)) found = true;
  });
  return found;
}

namespace {

class Translator {
 public:
  explicit Translator(const Node& root) : env_(names_in(root)) {}

  NodePtr run(const Node& root, TranslateReport* report) {
    auto out = clone(root);
    out = visit(out);
    if (!implicit_.empty()) {
      auto decl = make_node(NodeKind::DimensionDecl, out->pos);
      decl->names = {implicit_};
      if (out->kind == NodeKind::Where) {
        out->decls.insert(out->decls.begin(), decl);
      } else {
        auto w = make_node(NodeKind::Where, out->pos);
        w->kids = {out};
        w->decls = {decl};
        out = w;
      }
    }
    if (report) report->implicitDimension = implicit_;
    return out;
  }

 private:
  NodePtr visit(NodePtr n) {
    bool opens = n->kind == NodeKind::Where || n->kind == NodeKind::NestedWhereDecl;
    if (opens) {
      std::vector<std::string> dims;
      for (const auto& d : n->decls) {
        if (d->kind == NodeKind::DimensionDecl) dims.insert(dims.end(), d->names.begin(), d->names.end());
      }
      scopes_.push_back(std::move(dims));
    }
    for (auto& k : n->kids) k = visit(k);
    for (auto& s : n->subs) s = visit(s);
    for (auto& d : n->decls) d = visit(d);
    if (opens) scopes_.pop_back();

    if ((n->kind == NodeKind::UnOp || n->kind == NodeKind::BinOp) && is_dialect_op(n->op)) {
      return rewrite(*n);
    }
    return n;
  }

  std::string dimension_for(const Node& n) {
    if (!n.opDim.empty()) return n.opDim;
    std::vector<std::string> visible;
    for (const auto& s : scopes_) {
      for (const auto& d : s) {
        if (std::find(visible.begin(), visible.end(), d) == visible.end()) visible.push_back(d);
      }
    }
    if (visible.size() == 1) return visible.front();
    if (visible.size() > 1) {
      std::string list;
      for (const auto& d : visible) list += (list.empty() ? "" : ", ") + d;
      fail(ErrorCode::AmbiguousDimension,
           "'" + std::string(op_symbol(n.op)) + "' has no dimension and several are in scope (" + list + ")",
           n.pos);
    }
    if (implicit_.empty()) implicit_ = env_.taken("d") ? env_.fresh_id("d") : "d";
    env_.reserve(implicit_);
    return implicit_;
  }

  static NodePtr dim_id(const std::string& d, SourcePos pos) { return make_id(d, pos); }
  static NodePtr lit(std::int64_t v, SourcePos pos) { return make_literal(Value::integer(v), pos); }
  static NodePtr hash(const std::string& d, SourcePos pos) { return make_hash(dim_id(d, pos), pos); }

  static NodePtr shifted(const std::string& d, Op op, SourcePos pos) {
    return make_binop(op, {}, hash(d, pos), lit(1, pos), pos);
  }

  static NodePtr var(const std::string& name, NodePtr def, SourcePos pos) {
    auto v = make_node(NodeKind::VarDecl, pos);
    v->name = name;
    v->kids = {std::move(def)};
    return v;
  }

  static NodePtr where(NodePtr body, std::vector<NodePtr> decls, SourcePos pos) {
    auto w = make_node(NodeKind::Where, pos);
    w->kids = {std::move(body)};
    w->decls = std::move(decls);
    return w;
  }

  NodePtr fby(const std::string& d, NodePtr x, NodePtr y, SourcePos pos) {
    auto cond = make_binop(Op::Le, {}, hash(d, pos), lit(0, pos), pos);
    auto rest = make_at(std::move(y), dim_id(d, pos), shifted(d, Op::Sub, pos), pos);
    return make_if(cond, std::move(x), rest, pos);
  }

  NodePtr wvr(const std::string& d, NodePtr x, NodePtr y, SourcePos pos) {
    std::string t = env_.fresh_id("wvrT");
    std::string u = env_.fresh_id("wvrU");
    // T = U fby.d (U @.d (T + 1))
    auto tNext = make_at(make_id(u, pos), dim_id(d, pos),
                         make_binop(Op::Add, {}, make_id(t, pos), lit(1, pos), pos), pos);
    auto tDef = fby(d, make_id(u, pos), tNext, pos);
    // U = if Y then #.d else next.d U fi
    auto uNext = make_at(make_id(u, pos), dim_id(d, pos), shifted(d, Op::Add, pos), pos);
    auto uDef = make_if(std::move(y), hash(d, pos), uNext, pos);
    auto body = make_at(std::move(x), dim_id(d, pos), make_id(t, pos), pos);
    return where(body, {var(t, tDef, pos), var(u, uDef, pos)}, pos);
  }

  NodePtr upon(const std::string& d, NodePtr x, NodePtr y, SourcePos pos) {
    std::string w = env_.fresh_id("uponW");
    // W = 0 fby.d (if Y then W + 1 else W fi)
    auto step = make_if(std::move(y), make_binop(Op::Add, {}, make_id(w, pos), lit(1, pos), pos),
                        make_id(w, pos), pos);
    auto wDef = fby(d, lit(0, pos), step, pos);
    auto body = make_at(std::move(x), dim_id(d, pos), make_id(w, pos), pos);
    return where(body, {var(w, wDef, pos)}, pos);
  }

  NodePtr rewrite(const Node& n) {
    SourcePos pos = n.pos;
    if (n.op == Op::Iseod) fail(ErrorCode::Unsupported, "iseod is not supported", pos);
    std::string d = dimension_for(n);
    NodePtr x = n.kids[0];
    switch (n.op) {
      case Op::First:
        return make_at(x, dim_id(d, pos), lit(0, pos), pos);
      case Op::Next:
        return make_at(x, dim_id(d, pos), shifted(d, Op::Add, pos), pos);
      case Op::Prev:
        return make_at(x, dim_id(d, pos), shifted(d, Op::Sub, pos), pos);
      case Op::Fby:
        return fby(d, x, n.kids[1], pos);
      case Op::Wvr:
        return wvr(d, x, n.kids[1], pos);
      case Op::Asa: {
        auto filtered = wvr(d, x, n.kids[1], pos);
        return make_at(filtered, dim_id(d, pos), lit(0, pos), pos);
      }
      case Op::Upon:
        return upon(d, x, n.kids[1], pos);
      default:
        return clone(n);
    }
  }

  RewriteEnv env_;
  std::vector<std::vector<std::string>> scopes_;
  std::string implicit_;
};

}  // namespace

NodePtr translate(const Node& root, TranslateReport* report) {
  return Translator(root).run(root, report);
}

}  // namespace lucid
