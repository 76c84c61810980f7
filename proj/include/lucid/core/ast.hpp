#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lucid/core/error.hpp"
#include "lucid/core/value.hpp"

namespace lucid {

enum class NodeKind {
  // expressions
  Id,
  Literal,
  Call,       // kids: callee, args...; subs: bracketed dimension arguments
  If,         // kids: cond, then, else
  Hash,       // kids: dimension
  At,         // kids: body, dimension, tag
  ContextAt,  // kids: body, context expression (two-operand @, never legal GIPL)
  Where,      // kids: body; decls
  ArrayLit,   // kids: elements
  Index,      // kids: array, indices...
  DotField,   // kids: object; name: field
  DotCall,    // kids: object, args...; name: method
  Embed,      // text: uri; name: method; kids: args
  UnOp,       // kids: operand
  BinOp,      // kids: lhs, rhs
  // declarations
  DimensionDecl,    // names
  VarDecl,          // name; kids: definition
  FuncDecl,         // name; names: formals; kids: body
  ArrayElemDecl,    // name; subs: indices; kids: definition
  NestedWhereDecl,  // decls
  ExprDecl,         // kids: expression
  DimFuncDecl,      // name; dims; names: formals; kids: body
  FieldDecl,        // name: object; text: field; kids: definition
};

enum class Op {
  Neg,
  Not,
  First,
  Next,
  Prev,
  Iseod,
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  Lt,
  Le,
  Gt,
  Ge,
  Eq,
  Ne,
  And,
  Or,
  BitAnd,
  BitOr,
  Fby,
  Wvr,
  Asa,
  Upon,
};

std::string_view to_string(NodeKind kind);
std::string_view op_symbol(Op op);
bool is_dialect_op(Op op);  // first next prev iseod fby wvr asa upon
bool is_declaration(NodeKind kind);

struct Node;
using NodePtr = std::shared_ptr<Node>;

struct Node {
  NodeKind kind = NodeKind::Literal;
  SourcePos pos;

  std::string name;
  std::string text;
  Op op = Op::Add;
  std::string opDim;  // dimension qualifier of a dialect operator; empty when undecorated
  Value literal;

  std::vector<NodePtr> kids;
  std::vector<NodePtr> decls;
  std::vector<NodePtr> subs;
  std::vector<std::string> names;
  std::vector<std::string> dims;

  // Where clause whose `where`/`end` keywords were absent in the source.
  bool implicitWhere = false;

  // Filled in by analysis: the dictionary scope an identifier is resolved
  // from, and a preorder number unique within one tree.
  int scope = -1;
  int id = -1;
};

NodePtr make_node(NodeKind kind, SourcePos pos = {});
NodePtr make_id(std::string name, SourcePos pos = {});
NodePtr make_literal(Value v, SourcePos pos = {});
NodePtr make_unop(Op op, std::string dim, NodePtr operand, SourcePos pos = {});
NodePtr make_binop(Op op, std::string dim, NodePtr lhs, NodePtr rhs, SourcePos pos = {});
NodePtr make_at(NodePtr body, NodePtr dim, NodePtr tag, SourcePos pos = {});
NodePtr make_hash(NodePtr dim, SourcePos pos = {});
NodePtr make_if(NodePtr c, NodePtr t, NodePtr e, SourcePos pos = {});

NodePtr clone(const Node& node);

// Shape equality: positions, the implicit-where flag and analysis
// annotations are ignored unless `annotations` is set, in which case scope
// references are compared too.
bool structural_equal(const Node& a, const Node& b, bool annotations = false);

// Preorder visit of every node (declarations included).
template <typename F>
void walk(const Node& node, F&& f) {
  f(node);
  for (const auto& k : node.kids) walk(*k, f);
  for (const auto& s : node.subs) walk(*s, f);
  for (const auto& d : node.decls) walk(*d, f);
}

template <typename F>
void walk_mut(Node& node, F&& f) {
  f(node);
  for (auto& k : node.kids) walk_mut(*k, f);
  for (auto& s : node.subs) walk_mut(*s, f);
  for (auto& d : node.decls) walk_mut(*d, f);
}

// Assigns `id` in preorder, starting at 0. Returns the node count.
int number_nodes(Node& root);

}  // namespace lucid
