#pragma once

#include <string>
#include <vector>

#include "citor/polynomial.hpp"
#include "lexer.hpp"

namespace citor::detail {

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_symbol(const char* s) const { return peek().kind == Tok::symbol && peek().text == s; }
  bool at_ident(const char* s) const { return peek().kind == Tok::ident && peek().text == s; }
  bool accept_symbol(const char* s) {
    if (!at_symbol(s)) return false;
    next();
    return true;
  }
  const Token& expect_symbol(const char* s);
  const Token& expect_ident();
  void skip_newlines() {
    while (peek().kind == Tok::newline) next();
  }
  // Adjacent tokens without whitespace between them, glued into one word
  // (e.g. "3.12(2)" or "pre-3.4"). Stops at stop_before if given.
  std::string read_glued_word(const char* stop_before = nullptr);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// expr := ['-'] term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := primary ['^' number]; primary := number | variable | '(' expr ')'.
Polynomial parse_poly_expr(TokenStream& ts, const SpacePtr& space);

}  // namespace citor::detail
