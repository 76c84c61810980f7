#include "lucid/frontend/printer.hpp"

namespace lucid {

namespace {

class Printer {
 public:
  explicit Printer(bool pretty) : pretty_(pretty) {}

  std::string run(const Node& n) {
    node(n);
    return std::move(out_);
  }

 private:
  void node(const Node& n) {
    if (is_declaration(n.kind)) {
      decl(n);
    } else {
      expr(n);
    }
  }

  void list(const std::vector<NodePtr>& items, std::size_t from = 0) {
    for (std::size_t i = from; i < items.size(); ++i) {
      if (i > from) out_ += ", ";
      expr(*items[i]);
    }
  }

  void names(const std::vector<std::string>& ns) {
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (i) out_ += ", ";
      out_ += ns[i];
    }
  }

  void operand(const Node& n) {
    if (n.kind == NodeKind::Id) {
      out_ += n.name;
    } else {
      out_ += "(";
      expr(n);
      out_ += ")";
    }
  }

  void qualified(Op op, const std::string& dim) {
    out_ += op_symbol(op);
    if (!dim.empty()) out_ += "." + dim;
  }

  void newline() {
    if (pretty_) {
      out_ += "\n";
      out_.append(static_cast<std::size_t>(indent_) * 4, ' ');
    } else {
      out_ += " ";
    }
  }

  void expr(const Node& n) {
    switch (n.kind) {
      case NodeKind::Id:
        out_ += n.name;
        return;
      case NodeKind::Literal:
        out_ += n.literal.render();
        return;
      case NodeKind::Call:
        operand(*n.kids[0]);
        if (!n.subs.empty()) {
          out_ += "[";
          list(n.subs);
          out_ += "]";
        }
        out_ += "(";
        list(n.kids, 1);
        out_ += ")";
        return;
      case NodeKind::If:
        out_ += "(if ";
        expr(*n.kids[0]);
        out_ += " then ";
        expr(*n.kids[1]);
        out_ += " else ";
        expr(*n.kids[2]);
        out_ += " fi)";
        return;
      case NodeKind::Hash:
        out_ += "(#.";
        operand(*n.kids[0]);
        out_ += ")";
        return;
      case NodeKind::At:
        out_ += "(";
        expr(*n.kids[0]);
        out_ += " @.";
        operand(*n.kids[1]);
        out_ += " (";
        expr(*n.kids[2]);
        out_ += "))";
        return;
      case NodeKind::ContextAt:
        out_ += "(";
        expr(*n.kids[0]);
        out_ += " @ (";
        expr(*n.kids[1]);
        out_ += "))";
        return;
      case NodeKind::Where:
        out_ += "(";
        expr(*n.kids[0]);
        newline();
        out_ += "where";
        ++indent_;
        for (const auto& d : n.decls) {
          newline();
          decl(*d);
        }
        --indent_;
        newline();
        out_ += "end)";
        return;
      case NodeKind::ArrayLit:
        out_ += "[";
        list(n.kids);
        out_ += "]";
        return;
      case NodeKind::Index:
        operand(*n.kids[0]);
        out_ += "[";
        list(n.kids, 1);
        out_ += "]";
        return;
      case NodeKind::DotField:
        operand(*n.kids[0]);
        out_ += "." + n.name;
        return;
      case NodeKind::DotCall:
        operand(*n.kids[0]);
        out_ += "." + n.name;
        if (!n.subs.empty()) {
          out_ += "[";
          list(n.subs);
          out_ += "]";
        }
        out_ += "(";
        list(n.kids, 1);
        out_ += ")";
        return;
      case NodeKind::Embed:
        out_ += "embed(" + Value::string(n.text).render() + ", " + Value::string(n.name).render();
        for (const auto& k : n.kids) {
          out_ += ", ";
          expr(*k);
        }
        out_ += ")";
        return;
      case NodeKind::UnOp:
        out_ += "(";
        qualified(n.op, n.opDim);
        out_ += " ";
        expr(*n.kids[0]);
        out_ += ")";
        return;
      case NodeKind::BinOp:
        out_ += "(";
        expr(*n.kids[0]);
        out_ += " ";
        qualified(n.op, n.opDim);
        out_ += " ";
        expr(*n.kids[1]);
        out_ += ")";
        return;
      default:
        decl(n);
    }
  }

  void decl(const Node& n) {
    switch (n.kind) {
      case NodeKind::DimensionDecl:
        out_ += "dimension ";
        names(n.names);
        break;
      case NodeKind::VarDecl:
        out_ += n.name + " = ";
        expr(*n.kids[0]);
        break;
      case NodeKind::FuncDecl:
        out_ += n.name;
        if (!n.dims.empty()) {
          out_ += "[";
          names(n.dims);
          out_ += "]";
        }
        out_ += "(";
        names(n.names);
        out_ += ") = ";
        expr(*n.kids[0]);
        break;
      case NodeKind::ArrayElemDecl:
        out_ += n.name + "[";
        list(n.subs);
        out_ += "] = ";
        expr(*n.kids[0]);
        break;
      case NodeKind::NestedWhereDecl:
        out_ += "where";
        ++indent_;
        for (const auto& d : n.decls) {
          newline();
          decl(*d);
        }
        --indent_;
        newline();
        out_ += "end";
        break;
      case NodeKind::ExprDecl:
        out_ += "(";
        expr(*n.kids[0]);
        out_ += ")";
        break;
      case NodeKind::DimFuncDecl:
        out_ += n.name + ".";
        names(n.dims);
        out_ += "(";
        names(n.names);
        out_ += ") = ";
        expr(*n.kids[0]);
        break;
      case NodeKind::FieldDecl:
        out_ += n.name + "." + n.text + " = ";
        expr(*n.kids[0]);
        break;
      default:
        expr(n);
        return;
    }
    out_ += ";";
  }

  bool pretty_;
  int indent_ = 0;
  std::string out_;
};

}  // namespace

std::string print(const Node& node) { return Printer(false).run(node); }

std::string print_pretty(const Node& node) { return Printer(true).run(node); }

}  // namespace lucid
