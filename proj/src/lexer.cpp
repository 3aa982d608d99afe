#include "lexer.hpp"

#include <cctype>

namespace gig::detail {

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::string: return "quoted symbol";
    case Tok::eps: return "'#eps'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::semi: return "';'";
    case Tok::colon: return "':'";
    case Tok::pipe: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::end: return "end of input";
  }
  return "?";
}

void Lexer::bump() {
  if (at(pos_) == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  ++pos_;
}

void Lexer::skip_space() {
  for (;;) {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
    if (at(pos_) == '/' && at(pos_ + 1) == '/') {
      while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      continue;
    }
    return;
  }
}

void Lexer::advance() {
  skip_space();
  current_ = Token{};
  current_.line = line_;
  current_.column = column_;
  if (pos_ >= src_.size()) return;

  const char c = src_[pos_];
  auto single = [&](Tok kind) {
    current_.kind = kind;
    current_.text = std::string(1, c);
    bump();
  };
  switch (c) {
    case '^': return single(Tok::caret);
    case '(': return single(Tok::lparen);
    case ')': return single(Tok::rparen);
    case '{': return single(Tok::lbrace);
    case '}': return single(Tok::rbrace);
    case ';': return single(Tok::semi);
    case ':': return single(Tok::colon);
    case '|': return single(Tok::pipe);
    default: break;
  }
  if (c == '-' && at(pos_ + 1) == '>') {
    current_.kind = Tok::arrow;
    current_.text = "->";
    bump();
    bump();
    return;
  }
  if (c == '#') {
    if (src_.substr(pos_, 4) != "#eps") fail("expected '#eps'");
    current_.kind = Tok::eps;
    current_.text = "#eps";
    for (int i = 0; i < 4; ++i) bump();
    return;
  }
  if (c == '"') {
    bump();
    std::string text;
    for (;;) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') fail("unterminated quoted symbol");
      char d = src_[pos_];
      if (d == '"') break;
      if (d == '\\') {
        bump();
        if (pos_ >= src_.size()) fail("unterminated escape");
        d = src_[pos_];
      }
      text += d;
      bump();
    }
    bump();
    if (text.empty()) fail("empty quoted symbol");
    current_.kind = Tok::string;
    current_.text = std::move(text);
    return;
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::size_t end = pos_;
    while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) ||
                                 src_[end] == '_' || src_[end] == '\''))
      ++end;
    current_.kind = Tok::ident;
    current_.text = std::string(src_.substr(pos_, end - pos_));
    while (pos_ < end) bump();
    return;
  }
  fail(std::string("unexpected character '") + c + "'");
}

Token Lexer::next() {
  Token t = current_;
  advance();
  return t;
}

bool Lexer::accept(Tok kind) {
  if (current_.kind != kind) return false;
  advance();
  return true;
}

Token Lexer::expect(Tok kind, const char* context) {
  if (current_.kind != kind) {
    std::string got = current_.kind == Tok::end ? "end of input" : "'" + current_.text + "'";
    throw SyntaxError(std::string("expected ") + describe(kind) + " " + context + ", got " + got,
                      current_.line, current_.column);
  }
  return next();
}

void Lexer::fail(const std::string& message) const {
  throw SyntaxError(message, line_, column_);
}

}  // namespace gig::detail
