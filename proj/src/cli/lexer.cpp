#include "lexer.hpp"

#include <cctype>

#include "citor/errors.hpp"

namespace citor::detail {

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t start, std::size_t len, int c) {
    out.push_back(Token{kind, text.substr(start, len), line, c, start});
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      push(Tok::newline, i, 1, col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    const std::size_t start = i;
    const int start_col = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      col += static_cast<int>(i - start);
      push(Tok::ident, start, i - start, start_col);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      col += static_cast<int>(i - start);
      push(Tok::number, start, i - start, start_col);
      continue;
    }
    if (static_cast<unsigned char>(ch) >= 0x80) {
      Token t{Tok::symbol, text.substr(i, 1), line, col, i};
      parse_fail(t, "unexpected non-ASCII character");
    }
    ++i;
    ++col;
    push(Tok::symbol, start, 1, start_col);
  }
  out.push_back(Token{Tok::end, "", line, col, text.size()});
  return out;
}

void parse_fail(const Token& at, const std::string& message) {
  fail(ErrorKind::parse_error, "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " +
                                   message + (at.kind == Tok::end ? " (at end of input)" : " near '" + at.text + "'"));
}

}  // namespace citor::detail
