#pragma once

// Surface syntax:
//
//   term   := element (element | '*' stream)*     left-associative chain
//   element := IDENT | CONST | '(' term ')'
//   stream := SIDENT | '(' cons ')'
//   cons   := term '::' (SIDENT | cons)           flat right-nested chains
//   CONST  := K0 | K1 | S0 | S1 | C10 | C11 | W1
//
// IDENT and SIDENT are as in the lambda-mu syntax. '//' comments.

#include <string>

#include "lmu/lm/parse.hpp"
#include "lmu/scl/term.hpp"

namespace lmu {
namespace detail {

enum class SclTok { Star, DColon, LP, RP, Ident, Const, SIdent, End };

struct SclToken {
  SclTok k;
  std::string text;
  SclConst cst = SclConst::K0;
  int line, col;
};

struct SclLexer {
  const std::string& src;
  std::size_t i = 0;
  int line = 1, col = 1;

  explicit SclLexer(const std::string& s) : src(s) {}

  void advance() {
    if (src[i] == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    i++;
  }

  SclToken next() {
    for (;;) {
      while (i < src.size() &&
             (src[i] == ' ' || src[i] == '\t' || src[i] == '\n' || src[i] == '\r'))
        advance();
      if (i + 1 < src.size() && src[i] == '/' && src[i + 1] == '/') {
        while (i < src.size() && src[i] != '\n') advance();
        continue;
      }
      break;
    }
    if (i >= src.size()) return {SclTok::End, "", SclConst::K0, line, col};
    int l = line, c = col;
    char ch = src[i];
    if (ch == '*') {
      advance();
      return {SclTok::Star, "*", SclConst::K0, l, c};
    }
    if (ch == ':') {
      advance();
      if (i >= src.size() || src[i] != ':')
        throw ParseError("expected '::'", l, c);
      advance();
      return {SclTok::DColon, "::", SclConst::K0, l, c};
    }
    if (ch == '(') {
      advance();
      return {SclTok::LP, "(", SclConst::K0, l, c};
    }
    if (ch == ')') {
      advance();
      return {SclTok::RP, ")", SclConst::K0, l, c};
    }
    if (ch == '\'') {
      advance();
      if (i >= src.size() || !ident_start(src[i]))
        throw ParseError("expected stream variable name after '", l, c);
      std::string name;
      while (i < src.size() && ident_char(src[i])) {
        name += src[i];
        advance();
      }
      return {SclTok::SIdent, name, SclConst::K0, l, c};
    }
    if (ident_start(ch)) {
      std::string name;
      while (i < src.size() && ident_char(src[i])) {
        name += src[i];
        advance();
      }
      return {SclTok::Ident, name, SclConst::K0, l, c};
    }
    if (ch >= 'A' && ch <= 'Z') {
      std::string name;
      while (i < src.size() && ident_char(src[i])) {
        name += src[i];
        advance();
      }
      SclConst cst;
      if (name == "K0") cst = SclConst::K0;
      else if (name == "K1") cst = SclConst::K1;
      else if (name == "S0") cst = SclConst::S0;
      else if (name == "S1") cst = SclConst::S1;
      else if (name == "C10") cst = SclConst::C10;
      else if (name == "C11") cst = SclConst::C11;
      else if (name == "W1") cst = SclConst::W1;
      else throw ParseError("unknown constant " + name, l, c);
      return {SclTok::Const, name, cst, l, c};
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
  }
};

struct SclParser {
  SclLexer lex;
  SclToken tok;

  explicit SclParser(const std::string& s) : lex(s) { tok = lex.next(); }

  void bump() { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, tok.line, tok.col);
  }

  SclTerm parse_term() {
    SclTerm t = parse_element();
    for (;;) {
      if (tok.k == SclTok::Ident || tok.k == SclTok::Const || tok.k == SclTok::LP) {
        t = SclTerm::app(t, parse_element());
      } else if (tok.k == SclTok::Star) {
        bump();
        t = SclTerm::sapp(t, parse_stream());
      } else {
        break;
      }
    }
    return t;
  }

  SclTerm parse_element() {
    if (tok.k == SclTok::Ident) {
      SclTerm t = SclTerm::var(tok.text);
      bump();
      return t;
    }
    if (tok.k == SclTok::Const) {
      SclTerm t = SclTerm::constant(tok.cst);
      bump();
      return t;
    }
    if (tok.k == SclTok::LP) {
      bump();
      SclTerm t = parse_term();
      if (tok.k != SclTok::RP) fail("expected ')'");
      bump();
      return t;
    }
    fail("expected a term");
  }

  SclStream parse_stream() {
    if (tok.k == SclTok::SIdent) {
      SclStream s = SclStream::var(tok.text);
      bump();
      return s;
    }
    if (tok.k == SclTok::LP) {
      bump();
      SclStream s = parse_cons();
      if (tok.k != SclTok::RP) fail("expected ')'");
      bump();
      return s;
    }
    fail("expected a stream");
  }

  SclStream parse_cons() {
    SclTerm head = parse_term();
    if (tok.k != SclTok::DColon) fail("expected '::'");
    bump();
    SclStream tail;
    if (tok.k == SclTok::SIdent) {
      tail = SclStream::var(tok.text);
      bump();
    } else {
      tail = parse_cons();
    }
    return SclStream::cons(head, tail);
  }
};

}  // namespace detail

inline SclTerm parse_scl(const std::string& src) {
  detail::SclParser p(src);
  SclTerm t = p.parse_term();
  if (p.tok.k != detail::SclTok::End)
    throw ParseError("unexpected trailing input", p.tok.line, p.tok.col);
  return t;
}

inline SclStream parse_scl_stream(const std::string& src) {
  detail::SclParser p(src);
  SclStream s;
  if (p.tok.k == detail::SclTok::SIdent) {
    s = SclStream::var(p.tok.text);
    p.bump();
  } else {
    s = p.parse_cons();
  }
  if (p.tok.k != detail::SclTok::End)
    throw ParseError("unexpected trailing input", p.tok.line, p.tok.col);
  return s;
}

}  // namespace lmu
