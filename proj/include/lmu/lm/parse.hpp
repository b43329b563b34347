#pragma once

// Surface syntax:
//
//   term  := '\' IDENT+ '.' term        lambda, multi-binder sugar
//          | '#' SIDENT '.' term        mu
//          | app
//   app   := atom (atom | SIDENT)*      left-associative; SIDENT applies a stream
//   atom  := IDENT | '(' term ')'
//   IDENT := [a-z][a-zA-Z0-9_]*
//   SIDENT := '\'' IDENT
//
// '//' starts a comment to end of line. Lambdas and mus must be
// parenthesized in argument position.

#include <string>
#include <vector>

#include "lmu/lm/term.hpp"

namespace lmu {
namespace detail {

enum class LmTok { Lam, Hash, Dot, LP, RP, Ident, SIdent, End };

struct LmToken {
  LmTok k;
  std::string text;
  int line, col;
};

inline bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
inline bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

struct LmLexer {
  const std::string& src;
  std::size_t i = 0;
  int line = 1, col = 1;

  explicit LmLexer(const std::string& s) : src(s) {}

  void advance() {
    if (src[i] == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    i++;
  }

  LmToken next() {
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
    if (i >= src.size()) return {LmTok::End, "", line, col};
    int l = line, c = col;
    char ch = src[i];
    switch (ch) {
      case '\\': advance(); return {LmTok::Lam, "\\", l, c};
      case '#': advance(); return {LmTok::Hash, "#", l, c};
      case '.': advance(); return {LmTok::Dot, ".", l, c};
      case '(': advance(); return {LmTok::LP, "(", l, c};
      case ')': advance(); return {LmTok::RP, ")", l, c};
      case '\'': {
        advance();
        if (i >= src.size() || !ident_start(src[i]))
          throw ParseError("expected stream variable name after '", l, c);
        std::string name;
        while (i < src.size() && ident_char(src[i])) {
          name += src[i];
          advance();
        }
        return {LmTok::SIdent, name, l, c};
      }
      default:
        if (ident_start(ch)) {
          std::string name;
          while (i < src.size() && ident_char(src[i])) {
            name += src[i];
            advance();
          }
          return {LmTok::Ident, name, l, c};
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }
  }
};

struct LmParser {
  LmLexer lex;
  LmToken tok;
  std::vector<std::string> tstack, sstack;

  explicit LmParser(const std::string& s) : lex(s) { tok = lex.next(); }

  void bump() { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, tok.line, tok.col);
  }

  LmTerm resolve_term(const std::string& name) {
    for (int k = (int)tstack.size() - 1; k >= 0; k--)
      if (tstack[k] == name) return LmTerm::bound((int)tstack.size() - 1 - k);
    return LmTerm::var(name);
  }

  StreamRef resolve_stream(const std::string& name) {
    for (int k = (int)sstack.size() - 1; k >= 0; k--)
      if (sstack[k] == name) return StreamRef::bound((int)sstack.size() - 1 - k);
    return StreamRef::free(StreamVar{name});
  }

  LmTerm parse_term() {
    if (tok.k == LmTok::Lam) {
      bump();
      std::vector<std::string> names;
      while (tok.k == LmTok::Ident) {
        names.push_back(tok.text);
        bump();
      }
      if (names.empty()) fail("expected variable name after \\");
      if (tok.k != LmTok::Dot) fail("expected '.' after lambda binder");
      bump();
      for (const auto& n : names) tstack.push_back(n);
      LmTerm body = parse_term();
      for (std::size_t k = 0; k < names.size(); k++) {
        tstack.pop_back();
        body = LmTerm::lam_raw(body);
      }
      return body;
    }
    if (tok.k == LmTok::Hash) {
      bump();
      if (tok.k != LmTok::SIdent) fail("expected stream variable after #");
      std::string name = tok.text;
      bump();
      if (tok.k != LmTok::Dot) fail("expected '.' after mu binder");
      bump();
      sstack.push_back(name);
      LmTerm body = parse_term();
      sstack.pop_back();
      return LmTerm::mu_raw(body);
    }
    return parse_app();
  }

  LmTerm parse_app() {
    LmTerm t = parse_atom();
    for (;;) {
      if (tok.k == LmTok::Ident || tok.k == LmTok::LP) {
        t = LmTerm::app(t, parse_atom());
      } else if (tok.k == LmTok::SIdent) {
        t = LmTerm::sapp_raw(t, resolve_stream(tok.text));
        bump();
      } else {
        break;
      }
    }
    return t;
  }

  LmTerm parse_atom() {
    if (tok.k == LmTok::Ident) {
      LmTerm t = resolve_term(tok.text);
      bump();
      return t;
    }
    if (tok.k == LmTok::LP) {
      bump();
      LmTerm t = parse_term();
      if (tok.k != LmTok::RP) fail("expected ')'");
      bump();
      return t;
    }
    if (tok.k == LmTok::Lam || tok.k == LmTok::Hash)
      fail("binders must be parenthesized here");
    fail("expected a term");
  }
};

}  // namespace detail

inline LmTerm parse_lm(const std::string& src) {
  detail::LmParser p(src);
  LmTerm t = p.parse_term();
  if (p.tok.k != detail::LmTok::End)
    throw ParseError("unexpected trailing input", p.tok.line, p.tok.col);
  return t;
}

}  // namespace lmu
