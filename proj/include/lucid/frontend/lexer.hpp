#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lucid/core/error.hpp"
#include "lucid/core/value.hpp"

namespace lucid {

enum class Tok {
  Ident,
  Int,
  Real,
  Str,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  Dot,
  At,
  Hash,
  Assign,  // =
  EqEq,
  NotEq,
  Lt,
  Le,
  Gt,
  Ge,
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  Bang,
  AndAnd,
  OrOr,
  Amp,
  Pipe,
  End,
};

std::string_view to_string(Tok t);

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
  Value value;  // Int, Real and Str literals
};

// Splits a segment into tokens. `firstLine` is the source line the segment
// text starts on, so positions refer back into the original file.
std::vector<Token> tokenize(std::string_view text, int firstLine = 1);

}  // namespace lucid
