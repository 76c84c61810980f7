#include "lucid/frontend/parser.hpp"

#include <algorithm>
#include <array>

#include "lucid/frontend/lexer.hpp"

namespace lucid {

std::string_view to_string(Dialect d) {
  switch (d) {
    case Dialect::Gipl: return "GIPL";
    case Dialect::Indexical: return "INDEXICALLUCID";
    case Dialect::JLucid: return "JLUCID";
    case Dialect::Objective: return "OBJECTIVELUCID";
  }
  return "?";
}

std::optional<Dialect> dialect_for_language(std::string_view langId) {
  if (langId == "GIPL") return Dialect::Gipl;
  if (langId == "INDEXICALLUCID" || langId == "INDEXICAL") return Dialect::Indexical;
  if (langId == "JLUCID") return Dialect::JLucid;
  if (langId == "OBJECTIVELUCID" || langId == "OBJECTIVE") return Dialect::Objective;
  return std::nullopt;
}

namespace {

constexpr std::array kBaseKeywords = {"if",  "then",      "else", "fi",   "where",
                                      "end", "dimension", "true", "false"};
constexpr std::array kStreamKeywords = {"first", "next", "prev", "iseod",
                                        "fby",   "wvr",  "asa",  "upon"};

class Parser {
 public:
  Parser(std::string_view text, Dialect dialect, int firstLine)
      : toks_(tokenize(text, firstLine)), dialect_(dialect) {}

  NodePtr program() {
    if (cur().kind == Tok::End) fail(ErrorCode::SyntaxError, "empty program", cur().pos);
    if (decl_shape_at(p_)) {
      SourcePos pos = cur().pos;
      auto decls = decls_until_branch_end();
      expect_eof();
      auto body = std::find_if(decls.begin(), decls.end(),
                               [](const NodePtr& d) { return d->kind == NodeKind::VarDecl; });
      if (body == decls.end()) {
        fail(ErrorCode::SyntaxError, "program declares no variable to evaluate", pos);
      }
      auto w = make_node(NodeKind::Where, pos);
      w->kids = {make_id((*body)->name, (*body)->pos)};
      w->decls = std::move(decls);
      w->implicitWhere = true;
      return w;
    }
    auto e = implicit_where(expr());
    accept(Tok::Semi);
    expect_eof();
    return e;
  }

 private:
  // --- token helpers ---------------------------------------------------

  const Token& cur() const { return toks_[p_]; }
  const Token& at(std::size_t k) const { return toks_[std::min(k, toks_.size() - 1)]; }
  bool is(Tok k) const { return cur().kind == k; }

  bool streams() const { return dialect_ != Dialect::Gipl; }
  bool arrays() const { return dialect_ == Dialect::JLucid || dialect_ == Dialect::Objective; }
  bool dots() const { return dialect_ == Dialect::Objective; }

  bool keyword(std::string_view w) const {
    if (std::find(kBaseKeywords.begin(), kBaseKeywords.end(), w) != kBaseKeywords.end()) return true;
    if (streams() && std::find(kStreamKeywords.begin(), kStreamKeywords.end(), w) != kStreamKeywords.end()) {
      return true;
    }
    return arrays() && w == "embed";
  }

  bool kw_at(std::size_t k, std::string_view w) const {
    const auto& t = at(k);
    return t.kind == Tok::Ident && t.text == w && keyword(w);
  }
  bool is_kw(std::string_view w) const { return kw_at(p_, w); }
  bool name_at(std::size_t k) const { return at(k).kind == Tok::Ident && !keyword(at(k).text); }

  void advance() {
    if (p_ + 1 < toks_.size()) ++p_;
  }

  bool accept(Tok k) {
    if (!is(k)) return false;
    advance();
    return true;
  }

  [[noreturn]] void unexpected(std::string_view wanted) const {
    const auto& t = cur();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    fail(ErrorCode::SyntaxError, "expected " + std::string(wanted) + ", got " + got, t.pos);
  }

  Token expect(Tok k) {
    if (!is(k)) unexpected(to_string(k));
    Token t = cur();
    advance();
    return t;
  }

  void expect_kw(std::string_view w) {
    if (!is_kw(w)) unexpected("'" + std::string(w) + "'");
    advance();
  }

  std::string expect_name() {
    if (!name_at(p_)) unexpected("identifier");
    std::string n = cur().text;
    advance();
    return n;
  }

  void expect_eof() {
    if (!is(Tok::End)) unexpected("end of input");
  }

  // Index just past the bracket group opening at `k`.
  std::size_t skip_group(std::size_t k) const {
    int depth = 0;
    for (std::size_t j = k; j < toks_.size(); ++j) {
      Tok t = toks_[j].kind;
      if (t == Tok::LParen || t == Tok::LBracket) ++depth;
      if (t == Tok::RParen || t == Tok::RBracket) {
        if (--depth == 0) return j + 1;
      }
      if (t == Tok::End) return j;
    }
    return toks_.size() - 1;
  }

  // Does a declaration start at token k?
  bool decl_shape_at(std::size_t k) const {
    if (kw_at(k, "dimension")) return true;
    if (!name_at(k)) return false;
    Tok n = at(k + 1).kind;
    if (n == Tok::Assign) return true;
    if (n == Tok::LParen) return at(skip_group(k + 1)).kind == Tok::Assign;
    if (n == Tok::LBracket) {
      std::size_t j = skip_group(k + 1);
      if (at(j).kind == Tok::Assign) return true;
      return at(j).kind == Tok::LParen && at(skip_group(j)).kind == Tok::Assign;
    }
    if (n == Tok::Dot && name_at(k + 2)) {
      std::size_t j = k + 3;
      if (at(j).kind == Tok::Assign) return true;
      while (at(j).kind == Tok::Comma && name_at(j + 1)) j += 2;
      return at(j).kind == Tok::LParen && at(skip_group(j)).kind == Tok::Assign;
    }
    return false;
  }

  // --- declarations ----------------------------------------------------

  std::vector<NodePtr> decls_until_end() {
    SourcePos pos = cur().pos;
    std::vector<NodePtr> decls;
    while (!is_kw("end")) {
      if (is(Tok::End)) unexpected("'end'");
      decls.push_back(decl());
      accept(Tok::Semi);
    }
    advance();
    if (decls.empty()) fail(ErrorCode::SyntaxError, "empty where clause", pos);
    return decls;
  }

  std::vector<NodePtr> decls_until_branch_end() {
    std::vector<NodePtr> decls;
    while (!is(Tok::End) && !is(Tok::RParen) && !is_kw("else") && !is_kw("fi") && !is_kw("end")) {
      decls.push_back(decl());
      accept(Tok::Semi);
    }
    return decls;
  }

  std::vector<std::string> name_list(Tok close) {
    std::vector<std::string> names;
    if (is(close)) {
      advance();
      return names;
    }
    do {
      names.push_back(expect_name());
    } while (accept(Tok::Comma));
    expect(close);
    return names;
  }

  std::vector<NodePtr> expr_list(Tok close) {
    std::vector<NodePtr> items;
    if (is(close)) {
      advance();
      return items;
    }
    do {
      items.push_back(expr());
    } while (accept(Tok::Comma));
    expect(close);
    return items;
  }

  NodePtr decl() {
    SourcePos pos = cur().pos;
    if (is_kw("dimension")) {
      advance();
      auto n = make_node(NodeKind::DimensionDecl, pos);
      do {
        n->names.push_back(expect_name());
      } while (accept(Tok::Comma));
      return n;
    }
    if (is_kw("where")) {
      advance();
      auto n = make_node(NodeKind::NestedWhereDecl, pos);
      n->decls = decls_until_end();
      return n;
    }
    if (decl_shape_at(p_)) {
      std::string name = expect_name();
      if (accept(Tok::Assign)) {
        auto n = make_node(NodeKind::VarDecl, pos);
        n->name = name;
        n->kids = {expr()};
        return n;
      }
      if (accept(Tok::LParen)) {
        auto n = make_node(NodeKind::FuncDecl, pos);
        n->name = name;
        n->names = name_list(Tok::RParen);
        expect(Tok::Assign);
        n->kids = {expr()};
        return n;
      }
      if (is(Tok::LBracket)) {
        std::size_t j = skip_group(p_);
        advance();
        if (at(j).kind == Tok::LParen) {
          auto n = make_node(NodeKind::FuncDecl, pos);
          n->name = name;
          n->dims = name_list(Tok::RBracket);
          expect(Tok::LParen);
          n->names = name_list(Tok::RParen);
          expect(Tok::Assign);
          n->kids = {expr()};
          return n;
        }
        auto n = make_node(NodeKind::ArrayElemDecl, pos);
        n->name = name;
        n->subs = expr_list(Tok::RBracket);
        expect(Tok::Assign);
        n->kids = {expr()};
        return n;
      }
      expect(Tok::Dot);
      std::string member = expect_name();
      if (accept(Tok::Assign)) {
        auto n = make_node(NodeKind::FieldDecl, pos);
        n->name = name;
        n->text = member;
        n->kids = {expr()};
        return n;
      }
      auto n = make_node(NodeKind::DimFuncDecl, pos);
      n->name = name;
      n->dims.push_back(member);
      while (accept(Tok::Comma)) n->dims.push_back(expect_name());
      expect(Tok::LParen);
      n->names = name_list(Tok::RParen);
      expect(Tok::Assign);
      n->kids = {expr()};
      return n;
    }
    auto n = make_node(NodeKind::ExprDecl, pos);
    n->kids = {expr()};
    return n;
  }

  // --- expressions -----------------------------------------------------

  NodePtr expr() {
    auto e = fby_level();
    while (is_kw("where")) {
      auto w = make_node(NodeKind::Where, cur().pos);
      advance();
      w->kids = {e};
      w->decls = decls_until_end();
      e = w;
    }
    return e;
  }

  // Declarations written straight after an expression without `where`.
  NodePtr implicit_where(NodePtr e) {
    if (!decl_shape_at(p_)) return e;
    auto w = make_node(NodeKind::Where, cur().pos);
    w->kids = {e};
    w->decls = decls_until_branch_end();
    w->implicitWhere = true;
    return w;
  }

  NodePtr branch() { return implicit_where(fby_level()); }

  std::string qualifier() {
    if (is(Tok::Dot) && at(p_ + 1).kind == Tok::Ident) {
      advance();
      std::string d = cur().text;
      advance();
      return d;
    }
    return {};
  }

  NodePtr fby_level() {
    auto lhs = wvr_level();
    if (streams() && is_kw("fby")) {
      SourcePos pos = cur().pos;
      advance();
      std::string d = qualifier();
      auto rhs = fby_level();
      return make_binop(Op::Fby, d, lhs, rhs, pos);
    }
    return lhs;
  }

  NodePtr wvr_level() {
    auto lhs = or_level();
    for (;;) {
      Op op;
      if (streams() && is_kw("wvr")) {
        op = Op::Wvr;
      } else if (streams() && is_kw("asa")) {
        op = Op::Asa;
      } else if (streams() && is_kw("upon")) {
        op = Op::Upon;
      } else {
        return lhs;
      }
      SourcePos pos = cur().pos;
      advance();
      std::string d = qualifier();
      lhs = make_binop(op, d, lhs, or_level(), pos);
    }
  }

  template <typename Next>
  NodePtr left_assoc(Next next, std::initializer_list<std::pair<Tok, Op>> ops) {
    auto lhs = (this->*next)();
    for (;;) {
      auto it = std::find_if(ops.begin(), ops.end(), [&](const auto& o) { return is(o.first); });
      if (it == ops.end()) return lhs;
      SourcePos pos = cur().pos;
      advance();
      lhs = make_binop(it->second, {}, lhs, (this->*next)(), pos);
    }
  }

  NodePtr or_level() { return left_assoc(&Parser::and_level, {{Tok::OrOr, Op::Or}}); }
  NodePtr and_level() { return left_assoc(&Parser::bitor_level, {{Tok::AndAnd, Op::And}}); }
  NodePtr bitor_level() { return left_assoc(&Parser::bitand_level, {{Tok::Pipe, Op::BitOr}}); }
  NodePtr bitand_level() { return left_assoc(&Parser::rel_level, {{Tok::Amp, Op::BitAnd}}); }
  NodePtr rel_level() {
    return left_assoc(&Parser::add_level, {{Tok::EqEq, Op::Eq},
                                           {Tok::Assign, Op::Eq},
                                           {Tok::NotEq, Op::Ne},
                                           {Tok::Lt, Op::Lt},
                                           {Tok::Le, Op::Le},
                                           {Tok::Gt, Op::Gt},
                                           {Tok::Ge, Op::Ge}});
  }
  NodePtr add_level() {
    return left_assoc(&Parser::mul_level, {{Tok::Plus, Op::Add}, {Tok::Minus, Op::Sub}});
  }
  NodePtr mul_level() {
    return left_assoc(&Parser::unary_level,
                      {{Tok::Star, Op::Mul}, {Tok::Slash, Op::Div}, {Tok::Percent, Op::Mod}});
  }

  NodePtr unary_level() {
    SourcePos pos = cur().pos;
    if (accept(Tok::Minus)) return make_unop(Op::Neg, {}, unary_level(), pos);
    if (accept(Tok::Bang)) return make_unop(Op::Not, {}, unary_level(), pos);
    if (streams()) {
      static constexpr std::pair<std::string_view, Op> kUnary[] = {
          {"first", Op::First}, {"next", Op::Next}, {"prev", Op::Prev}, {"iseod", Op::Iseod}};
      for (const auto& [w, op] : kUnary) {
        if (is_kw(w)) {
          advance();
          std::string d = qualifier();
          return make_unop(op, d, unary_level(), pos);
        }
      }
    }
    return at_level();
  }

  bool tag_start() const {
    switch (cur().kind) {
      case Tok::Int:
      case Tok::Real:
      case Tok::Str:
      case Tok::LParen:
      case Tok::Hash:
        return true;
      case Tok::LBracket:
        return arrays();
      case Tok::Ident:
        return !keyword(cur().text) || cur().text == "true" || cur().text == "false";
      default:
        return false;
    }
  }

  NodePtr at_level() {
    auto e = hash_level();
    while (is(Tok::At)) {
      SourcePos pos = cur().pos;
      advance();
      if (accept(Tok::LBracket)) {
        auto dim = expr();
        expect(Tok::Colon);
        auto tag = expr();
        expect(Tok::RBracket);
        e = make_at(e, dim, tag, pos);
        continue;
      }
      accept(Tok::Dot);
      NodePtr dim;
      if (name_at(p_)) {
        dim = make_id(cur().text, cur().pos);
        advance();
      } else if (is(Tok::LParen)) {
        advance();
        dim = expr();
        expect(Tok::RParen);
      } else {
        unexpected("dimension after '@'");
      }
      if (tag_start()) {
        e = make_at(e, dim, hash_level(), pos);
      } else {
        auto n = make_node(NodeKind::ContextAt, pos);
        n->kids = {e, dim};
        e = n;
      }
    }
    return e;
  }

  NodePtr hash_level() {
    if (is(Tok::Hash)) {
      SourcePos pos = cur().pos;
      advance();
      accept(Tok::Dot);
      return make_hash(primary(), pos);
    }
    return postfix_level();
  }

  NodePtr postfix_level() {
    auto e = primary();
    for (;;) {
      SourcePos pos = cur().pos;
      if (is(Tok::LParen)) {
        advance();
        auto call = make_node(NodeKind::Call, pos);
        call->kids = {e};
        for (auto& a : expr_list(Tok::RParen)) call->kids.push_back(a);
        e = call;
      } else if (is(Tok::LBracket) && at(skip_group(p_)).kind == Tok::LParen) {
        advance();
        auto call = make_node(NodeKind::Call, pos);
        call->subs = expr_list(Tok::RBracket);
        expect(Tok::LParen);
        call->kids = {e};
        for (auto& a : expr_list(Tok::RParen)) call->kids.push_back(a);
        e = call;
      } else if (is(Tok::LBracket) && arrays()) {
        advance();
        auto idx = make_node(NodeKind::Index, pos);
        idx->kids = {e};
        for (auto& a : expr_list(Tok::RBracket)) idx->kids.push_back(a);
        e = idx;
      } else if (is(Tok::Dot) && dots() && name_at(p_ + 1)) {
        advance();
        std::string member = expect_name();
        std::vector<NodePtr> subs;
        if (is(Tok::LBracket) && at(skip_group(p_)).kind == Tok::LParen) {
          advance();
          subs = expr_list(Tok::RBracket);
        }
        if (accept(Tok::LParen)) {
          auto call = make_node(NodeKind::DotCall, pos);
          call->name = member;
          call->subs = std::move(subs);
          call->kids = {e};
          for (auto& a : expr_list(Tok::RParen)) call->kids.push_back(a);
          e = call;
        } else {
          auto f = make_node(NodeKind::DotField, pos);
          f->name = member;
          f->kids = {e};
          e = f;
        }
      } else {
        return e;
      }
    }
  }

  NodePtr primary() {
    const Token& t = cur();
    SourcePos pos = t.pos;
    switch (t.kind) {
      case Tok::Int:
      case Tok::Real:
      case Tok::Str: {
        auto n = make_literal(t.value, pos);
        advance();
        return n;
      }
      case Tok::LParen: {
        advance();
        auto e = expr();
        expect(Tok::RParen);
        return e;
      }
      case Tok::LBracket: {
        if (!arrays()) break;
        advance();
        auto n = make_node(NodeKind::ArrayLit, pos);
        n->kids = expr_list(Tok::RBracket);
        return n;
      }
      case Tok::Ident: {
        if (is_kw("true") || is_kw("false")) {
          auto n = make_literal(Value::boolean(t.text == "true"), pos);
          advance();
          return n;
        }
        if (is_kw("if")) return if_expr();
        if (is_kw("embed")) return embed();
        if (keyword(t.text)) break;
        auto n = make_id(t.text, pos);
        advance();
        return n;
      }
      default:
        break;
    }
    unexpected("expression");
  }

  NodePtr if_expr() {
    SourcePos pos = cur().pos;
    advance();
    auto c = fby_level();
    if (is_kw("then")) advance();
    auto t = branch();
    expect_kw("else");
    auto e = branch();
    if (is_kw("fi")) advance();
    return make_if(c, t, e, pos);
  }

  NodePtr embed() {
    SourcePos pos = cur().pos;
    advance();
    expect(Tok::LParen);
    auto n = make_node(NodeKind::Embed, pos);
    n->text = expect(Tok::Str).text;
    expect(Tok::Comma);
    n->name = expect(Tok::Str).text;
    while (accept(Tok::Comma)) n->kids.push_back(expr());
    expect(Tok::RParen);
    return n;
  }

  std::vector<Token> toks_;
  std::size_t p_ = 0;
  Dialect dialect_;
};

}  // namespace

NodePtr parse(std::string_view text, Dialect dialect, int firstLine) {
  return Parser(text, dialect, firstLine).program();
}

NodePtr parse_gipl(std::string_view text, int firstLine) {
  return parse(text, Dialect::Gipl, firstLine);
}

NodePtr parse_indexical(std::string_view text, int firstLine) {
  return parse(text, Dialect::Objective, firstLine);
}

}  // namespace lucid
