#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace citor::detail {

enum class Tok { ident, number, symbol, newline, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
  std::size_t offset = 0;  // byte offset of the first character
};

// '#' starts a comment running to the end of the line.
std::vector<Token> tokenize(const std::string& text);

[[noreturn]] void parse_fail(const Token& at, const std::string& message);

}  // namespace citor::detail
