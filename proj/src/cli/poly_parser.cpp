#include <algorithm>

#include "citor/errors.hpp"
#include "citor/parse.hpp"
#include "token_stream.hpp"

namespace citor::detail {

const Token& TokenStream::expect_symbol(const char* s) {
  if (!at_symbol(s)) parse_fail(peek(), std::string("expected '") + s + "'");
  return next();
}

const Token& TokenStream::expect_ident() {
  if (peek().kind != Tok::ident) parse_fail(peek(), "expected a name");
  return next();
}

std::string TokenStream::read_glued_word(const char* stop_before) {
  std::string word;
  const Token* prev = nullptr;
  while (true) {
    const Token& t = peek();
    if (t.kind == Tok::newline || t.kind == Tok::end) break;
    if (prev && t.offset != prev->offset + prev->text.size()) break;
    if (stop_before && t.kind == Tok::symbol && t.text == stop_before && !word.empty()) break;
    word += t.text;
    prev = &next();
  }
  if (word.empty()) parse_fail(peek(), "expected an identifier");
  return word;
}

namespace {

Polynomial parse_term(TokenStream& ts, const SpacePtr& space);

Polynomial parse_primary(TokenStream& ts, const SpacePtr& space) {
  const Token& t = ts.peek();
  if (t.kind == Tok::number) {
    ts.next();
    mpz_class v(t.text);
    return Polynomial::constant(space, Coefficient(space->field, mpq_class(v)));
  }
  if (t.kind == Tok::ident) {
    const auto& names = space->names;
    auto it = std::find(names.begin(), names.end(), t.text);
    if (it == names.end()) parse_fail(t, "unknown variable '" + t.text + "'");
    ts.next();
    return Polynomial::variable(space, static_cast<std::size_t>(it - names.begin()));
  }
  if (ts.accept_symbol("(")) {
    Polynomial p = parse_poly_expr(ts, space);
    ts.expect_symbol(")");
    return p;
  }
  parse_fail(t, "expected a number, variable or '('");
}

Polynomial parse_factor(TokenStream& ts, const SpacePtr& space) {
  Polynomial base = parse_primary(ts, space);
  if (ts.accept_symbol("^")) {
    const Token& e = ts.peek();
    if (e.kind != Tok::number) parse_fail(e, "expected an exponent");
    ts.next();
    long k = std::stol(e.text);
    if (k > 200) parse_fail(e, "exponent too large");
    Polynomial out = Polynomial::constant(space, 1);
    for (long i = 0; i < k; ++i) out = out * base;
    return out;
  }
  return base;
}

Polynomial parse_term(TokenStream& ts, const SpacePtr& space) {
  Polynomial p = parse_factor(ts, space);
  while (true) {
    if (ts.accept_symbol("*")) {
      p = p * parse_factor(ts, space);
    } else if (ts.at_symbol("/")) {
      const Token& slash = ts.next();
      Polynomial d = parse_factor(ts, space);
      if (!d.is_unit()) parse_fail(slash, "division is only allowed by nonzero constants");
      p = p.scaled(d.leading().coefficient.inverse());
    } else {
      return p;
    }
  }
}

}  // namespace

Polynomial parse_poly_expr(TokenStream& ts, const SpacePtr& space) {
  Polynomial p(space);
  bool negate = false;
  if (ts.accept_symbol("-")) {
    negate = true;
  } else {
    ts.accept_symbol("+");
  }
  p = parse_term(ts, space);
  if (negate) p = -p;
  while (true) {
    if (ts.accept_symbol("+")) {
      p = p + parse_term(ts, space);
    } else if (ts.accept_symbol("-")) {
      p = p - parse_term(ts, space);
    } else {
      return p;
    }
  }
}

}  // namespace citor::detail

namespace citor {

Polynomial parse_polynomial(const std::string& text, const SpacePtr& space) {
  detail::TokenStream ts(detail::tokenize(text));
  Polynomial p = detail::parse_poly_expr(ts, space);
  if (ts.peek().kind != detail::Tok::end) detail::parse_fail(ts.peek(), "unexpected trailing input");
  return p;
}

}  // namespace citor
