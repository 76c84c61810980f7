#include "lucid/core/ast.hpp"

namespace lucid {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Id: return "Id";
    case NodeKind::Literal: return "Literal";
    case NodeKind::Call: return "Call";
    case NodeKind::If: return "If";
    case NodeKind::Hash: return "Hash";
    case NodeKind::At: return "At";
    case NodeKind::ContextAt: return "ContextAt";
    case NodeKind::Where: return "Where";
    case NodeKind::ArrayLit: return "ArrayLit";
    case NodeKind::Index: return "Index";
    case NodeKind::DotField: return "DotField";
    case NodeKind::DotCall: return "DotCall";
    case NodeKind::Embed: return "Embed";
    case NodeKind::UnOp: return "UnOp";
    case NodeKind::BinOp: return "BinOp";
    case NodeKind::DimensionDecl: return "DimensionDecl";
    case NodeKind::VarDecl: return "VarDecl";
    case NodeKind::FuncDecl: return "FuncDecl";
    case NodeKind::ArrayElemDecl: return "ArrayElemDecl";
    case NodeKind::NestedWhereDecl: return "NestedWhereDecl";
    case NodeKind::ExprDecl: return "ExprDecl";
    case NodeKind::DimFuncDecl: return "DimFuncDecl";
    case NodeKind::FieldDecl: return "FieldDecl";
  }
  return "?";
}

std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::Neg: return "-";
    case Op::Not: return "!";
    case Op::First: return "first";
    case Op::Next: return "next";
    case Op::Prev: return "prev";
    case Op::Iseod: return "iseod";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Mod: return "%";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::Eq: return "==";
    case Op::Ne: return "!=";
    case Op::And: return "&&";
    case Op::Or: return "||";
    case Op::BitAnd: return "&";
    case Op::BitOr: return "|";
    case Op::Fby: return "fby";
    case Op::Wvr: return "wvr";
    case Op::Asa: return "asa";
    case Op::Upon: return "upon";
  }
  return "?";
}

bool is_dialect_op(Op op) {
  switch (op) {
    case Op::First:
    case Op::Next:
    case Op::Prev:
    case Op::Iseod:
    case Op::Fby:
    case Op::Wvr:
    case Op::Asa:
    case Op::Upon:
      return true;
    default:
      return false;
  }
}

bool is_declaration(NodeKind kind) {
  return kind >= NodeKind::DimensionDecl;
}

NodePtr make_node(NodeKind kind, SourcePos pos) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->pos = pos;
  return n;
}

NodePtr make_id(std::string name, SourcePos pos) {
  auto n = make_node(NodeKind::Id, pos);
  n->name = std::move(name);
  return n;
}

NodePtr make_literal(Value v, SourcePos pos) {
  auto n = make_node(NodeKind::Literal, pos);
  n->literal = std::move(v);
  return n;
}

NodePtr make_unop(Op op, std::string dim, NodePtr operand, SourcePos pos) {
  auto n = make_node(NodeKind::UnOp, pos);
  n->op = op;
  n->opDim = std::move(dim);
  n->kids = {std::move(operand)};
  return n;
}

NodePtr make_binop(Op op, std::string dim, NodePtr lhs, NodePtr rhs, SourcePos pos) {
  auto n = make_node(NodeKind::BinOp, pos);
  n->op = op;
  n->opDim = std::move(dim);
  n->kids = {std::move(lhs), std::move(rhs)};
  return n;
}

NodePtr make_at(NodePtr body, NodePtr dim, NodePtr tag, SourcePos pos) {
  auto n = make_node(NodeKind::At, pos);
  n->kids = {std::move(body), std::move(dim), std::move(tag)};
  return n;
}

NodePtr make_hash(NodePtr dim, SourcePos pos) {
  auto n = make_node(NodeKind::Hash, pos);
  n->kids = {std::move(dim)};
  return n;
}

NodePtr make_if(NodePtr c, NodePtr t, NodePtr e, SourcePos pos) {
  auto n = make_node(NodeKind::If, pos);
  n->kids = {std::move(c), std::move(t), std::move(e)};
  return n;
}

namespace {

std::vector<NodePtr> clone_all(const std::vector<NodePtr>& nodes) {
  std::vector<NodePtr> out;
  out.reserve(nodes.size());
  for (const auto& n : nodes) out.push_back(clone(*n));
  return out;
}

bool all_equal(const std::vector<NodePtr>& a, const std::vector<NodePtr>& b, bool annotations) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!structural_equal(*a[i], *b[i], annotations)) return false;
  }
  return true;
}

}  // namespace

NodePtr clone(const Node& node) {
  auto n = std::make_shared<Node>(node);
  n->kids = clone_all(node.kids);
  n->decls = clone_all(node.decls);
  n->subs = clone_all(node.subs);
  return n;
}

bool structural_equal(const Node& a, const Node& b, bool annotations) {
  if (a.kind != b.kind || a.name != b.name || a.text != b.text) return false;
  if (a.kind == NodeKind::UnOp || a.kind == NodeKind::BinOp) {
    if (a.op != b.op || a.opDim != b.opDim) return false;
  }
  if (a.kind == NodeKind::Literal && !(a.literal == b.literal)) return false;
  if (a.names != b.names || a.dims != b.dims) return false;
  if (annotations && a.scope != b.scope) return false;
  return all_equal(a.kids, b.kids, annotations) && all_equal(a.subs, b.subs, annotations) &&
         all_equal(a.decls, b.decls, annotations);
}

int number_nodes(Node& root) {
  int next = 0;
  walk_mut(root, [&](Node& n) { n.id = next++; });
  return next;
}

}  // namespace lucid
