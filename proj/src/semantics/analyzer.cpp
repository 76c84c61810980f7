#include "lucid/semantics/analyzer.hpp"

#include <string>

#include "lucid/core/error.hpp"

namespace lucid {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string formals_detail(const Node& fn) {
  std::string out;
  if (!fn.dims.empty()) {
    out += "[";
    for (std::size_t i = 0; i < fn.dims.size(); ++i) out += (i ? "," : "") + fn.dims[i];
    out += "]";
  }
  out += "(";
  for (std::size_t i = 0; i < fn.names.size(); ++i) out += (i ? "," : "") + fn.names[i];
  return out + ")";
}

std::string_view unsupported_decl(NodeKind k) {
  switch (k) {
    case NodeKind::ArrayElemDecl: return "array element definitions are not supported";
    case NodeKind::NestedWhereDecl: return "nested where declarations are not supported";
    case NodeKind::ExprDecl: return "a bare expression is not a definition";
    case NodeKind::DimFuncDecl: return "dimension-subscripted function definitions are not supported";
    case NodeKind::FieldDecl: return "field assignments are not supported";
    default: return "unsupported declaration";
  }
}

class Analyzer {
 public:
  explicit Analyzer(Dictionary& d) : d_(d) {}

  void expr(Node& n, int scope) {
    switch (n.kind) {
      case NodeKind::Literal:
        return;
      case NodeKind::Id:
        return identifier(n, scope);
      case NodeKind::Hash:
        return dimension(*n.kids[0], scope);
      case NodeKind::At:
        expr(*n.kids[0], scope);
        dimension(*n.kids[1], scope);
        return expr(*n.kids[2], scope);
      case NodeKind::ContextAt:
        fail(ErrorCode::Unsupported, "@ needs a dimension and a tag; context values are not supported", n.pos);
      case NodeKind::Where:
        return where(n, scope);
      case NodeKind::Call:
        return call(n, scope);
      case NodeKind::DotCall:
        expr(*n.kids[0], scope);
        for (auto& s : n.subs) dimension(*s, scope);
        for (std::size_t i = 1; i < n.kids.size(); ++i) expr(*n.kids[i], scope);
        return;
      case NodeKind::UnOp:
      case NodeKind::BinOp:
        if (n.op == Op::Iseod) fail(ErrorCode::Unsupported, "iseod is not supported", n.pos);
        if (is_dialect_op(n.op)) {
          fail(ErrorCode::Unsupported,
               "operator '" + std::string(op_symbol(n.op)) + "' must be translated to GIPL first", n.pos);
        }
        break;
      default:
        if (is_declaration(n.kind)) fail(ErrorCode::Unsupported, std::string(unsupported_decl(n.kind)), n.pos);
        break;
    }
    for (auto& k : n.kids) expr(*k, scope);
  }

 private:
  void identifier(Node& n, int scope) {
    int at = d_.resolve_scope(scope, n.name);
    if (at < 0) fail(ErrorCode::UndefinedIdentifier, quoted(n.name) + " is not defined", n.pos);
    const DictEntry* e = d_.lookup(at, n.name);
    switch (e->kind) {
      case EntryKind::Func:
      case EntryKind::FreeFun:
      case EntryKind::Class:
        fail(ErrorCode::TypeError, quoted(n.name) + " is a function and must be applied to arguments", n.pos);
      default:
        break;
    }
    n.scope = at;
  }

  // E_tag and E_at need D(id) = (dim). A formal may stand for a dimension
  // passed by the caller; that is only known when it is evaluated.
  void dimension(Node& n, int scope) {
    if (n.kind != NodeKind::Id) {
      fail(ErrorCode::NotADimension, "a dimension must be named by an identifier", n.pos);
    }
    int at = d_.resolve_scope(scope, n.name);
    const DictEntry* e = at < 0 ? nullptr : d_.lookup(at, n.name);
    if (!e || (e->kind != EntryKind::Dim && e->kind != EntryKind::Formal)) {
      fail(ErrorCode::NotADimension, quoted(n.name) + " is not a dimension", n.pos);
    }
    n.scope = at;
  }

  void call(Node& n, int scope) {
    Node& callee = *n.kids[0];
    if (callee.kind != NodeKind::Id) fail(ErrorCode::Unsupported, "only named functions can be called", n.pos);
    int at = d_.resolve_scope(scope, callee.name);
    if (at < 0) fail(ErrorCode::UndefinedIdentifier, quoted(callee.name) + " is not defined", callee.pos);
    const DictEntry* e = d_.lookup(at, callee.name);
    callee.scope = at;
    int got = static_cast<int>(n.kids.size() - 1);
    switch (e->kind) {
      case EntryKind::Func:
        got += static_cast<int>(n.subs.size());
        break;
      case EntryKind::FreeFun:
      case EntryKind::Class:
        break;
      default:
        fail(ErrorCode::TypeError, quoted(callee.name) + " is not a function", callee.pos);
    }
    if (e->arity >= 0 && e->arity != got) {
      fail(ErrorCode::ArityMismatch,
           quoted(callee.name) + " expects " + std::to_string(e->arity) + " argument(s), got " + std::to_string(got),
           n.pos);
    }
    for (auto& s : n.subs) dimension(*s, scope);
    for (std::size_t i = 1; i < n.kids.size(); ++i) expr(*n.kids[i], scope);
  }

  // Q_dim and Q_id: every declaration of the clause is visible in the body
  // and in every definition of the clause, in any order.
  void where(Node& w, int scope) {
    int s = d_.extend(scope);
    w.scope = s;
    for (auto& decl : w.decls) {
      Node& dn = *decl;
      switch (dn.kind) {
        case NodeKind::DimensionDecl:
          for (const auto& name : dn.names) d_.define(s, name, {EntryKind::Dim, "", &dn}, dn.pos);
          break;
        case NodeKind::VarDecl:
          d_.define(s, dn.name, {EntryKind::Var, "", &dn}, dn.pos);
          break;
        case NodeKind::FuncDecl:
          d_.define(s, dn.name,
                    {EntryKind::Func, formals_detail(dn), &dn, -1, static_cast<int>(dn.dims.size() + dn.names.size())},
                    dn.pos);
          break;
        default:
          fail(ErrorCode::Unsupported, std::string(unsupported_decl(dn.kind)), dn.pos);
      }
    }
    for (auto& decl : w.decls) {
      Node& dn = *decl;
      if (dn.kind == NodeKind::VarDecl) {
        expr(*dn.kids[0], s);
      } else if (dn.kind == NodeKind::FuncDecl) {
        int f = d_.extend(s);
        dn.scope = f;
        int index = 0;
        for (const auto& name : dn.dims) {
          d_.define(f, name, {EntryKind::Formal, std::to_string(index), &dn, index}, dn.pos);
          ++index;
        }
        for (const auto& name : dn.names) {
          d_.define(f, name, {EntryKind::Formal, std::to_string(index), &dn, index}, dn.pos);
          ++index;
        }
        expr(*dn.kids[0], f);
      }
    }
    expr(*w.kids[0], s);
  }

  Dictionary& d_;
};

}  // namespace

void analyze_into(Node& root, Dictionary& dict) {
  Analyzer(dict).expr(root, Dictionary::kGlobal);
  number_nodes(root);
}

Dictionary analyze(Node& root, const Dictionary& stubs) {
  Dictionary d = stubs;
  analyze_into(root, d);
  return d;
}

}  // namespace lucid
