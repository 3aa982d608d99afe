#pragma once

#include <string>
#include <string_view>

#include "gig/error.hpp"

namespace gig::detail {

enum class Tok { ident, string, eps, caret, lparen, rparen, lbrace, rbrace, semi, colon, pipe, arrow, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

const char* describe(Tok kind);

/// Tokenizer for the tree, GIG and CFG text formats. `//` starts a line comment.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const noexcept { return current_; }
  Token next();
  bool accept(Tok kind);
  Token expect(Tok kind, const char* context);
  [[noreturn]] void fail(const std::string& message) const;

 private:
  void advance();
  void skip_space();
  char at(std::size_t i) const noexcept { return i < src_.size() ? src_[i] : '\0'; }
  void bump();

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

}  // namespace gig::detail
