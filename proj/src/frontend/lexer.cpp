#include "lucid/frontend/lexer.hpp"

#include <cctype>
#include <charconv>

namespace lucid {

std::string_view to_string(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Real: return "number";
    case Tok::Str: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::At: return "'@'";
    case Tok::Hash: return "'#'";
    case Tok::Assign: return "'='";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Percent: return "'%'";
    case Tok::Bang: return "'!'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

class Lexer {
 public:
  Lexer(std::string_view text, int line) : s_(text), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.pos = {line_, col_};
      if (i_ >= s_.size()) {
        t.kind = Tok::End;
        out.push_back(std::move(t));
        return out;
      }
      char c = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
          advance();
        }
        t.kind = Tok::Ident;
        t.text = std::string(s_.substr(b, i_ - b));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        number(t);
      } else if (c == '"' || c == '\'') {
        quoted(t, c);
      } else {
        punct(t);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < s_.size() ? s_[i_ + ahead] : '\0';
  }

  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourcePos start{line_, col_};
        advance();
        advance();
        while (i_ < s_.size() && !(s_[i_] == '*' && peek(1) == '/')) advance();
        if (i_ >= s_.size()) fail(ErrorCode::SyntaxError, "unterminated comment", start);
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  void number(Token& t) {
    std::size_t b = i_;
    bool real = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      real = true;
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      real = true;
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    t.text = std::string(s_.substr(b, i_ - b));
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (real) {
      double d = 0;
      std::from_chars(first, last, d);
      t.kind = Tok::Real;
      t.value = Value::real(d);
    } else {
      std::int64_t v = 0;
      auto res = std::from_chars(first, last, v);
      if (res.ec != std::errc()) {
        fail(ErrorCode::SyntaxError, "integer literal out of range: " + t.text, t.pos);
      }
      t.kind = Tok::Int;
      t.value = Value::integer(v);
    }
  }

  void quoted(Token& t, char quote) {
    advance();
    std::string body;
    while (i_ < s_.size() && s_[i_] != quote) {
      char c = s_[i_];
      if (c == '\n') break;
      if (c == '\\' && i_ + 1 < s_.size()) {
        advance();
        char e = s_[i_];
        switch (e) {
          case 'n': body += '\n'; break;
          case 't': body += '\t'; break;
          default: body += e;
        }
      } else {
        body += c;
      }
      advance();
    }
    if (i_ >= s_.size() || s_[i_] != quote) {
      fail(ErrorCode::SyntaxError, "unterminated literal", t.pos);
    }
    advance();
    t.kind = Tok::Str;
    t.text = body;
    t.value = Value::string(std::move(body));
  }

  void punct(Token& t) {
    char c = s_[i_];
    char n = peek(1);
    auto two = [&](Tok k) {
      t.kind = k;
      t.text = std::string(s_.substr(i_, 2));
      advance();
      advance();
    };
    auto one = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance();
    };
    switch (c) {
      case '(': return one(Tok::LParen);
      case ')': return one(Tok::RParen);
      case '[': return one(Tok::LBracket);
      case ']': return one(Tok::RBracket);
      case ',': return one(Tok::Comma);
      case ';': return one(Tok::Semi);
      case ':': return one(Tok::Colon);
      case '.': return one(Tok::Dot);
      case '@': return one(Tok::At);
      case '#': return one(Tok::Hash);
      case '+': return one(Tok::Plus);
      case '-': return one(Tok::Minus);
      case '*': return one(Tok::Star);
      case '/': return one(Tok::Slash);
      case '%': return one(Tok::Percent);
      case '=': return n == '=' ? two(Tok::EqEq) : one(Tok::Assign);
      case '!': return n == '=' ? two(Tok::NotEq) : one(Tok::Bang);
      case '<': return n == '=' ? two(Tok::Le) : one(Tok::Lt);
      case '>': return n == '=' ? two(Tok::Ge) : one(Tok::Gt);
      case '&': return n == '&' ? two(Tok::AndAnd) : one(Tok::Amp);
      case '|': return n == '|' ? two(Tok::OrOr) : one(Tok::Pipe);
      default:
        fail(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", {line_, col_});
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_;
  int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text, int firstLine) {
  return Lexer(text, firstLine).run();
}

}  // namespace lucid
