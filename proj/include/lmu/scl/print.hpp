#pragma once

// Application is juxtaposition, stream application is infix *, both
// left-associative at the same level: T U * 'a V means ((T U) * 'a) V.
// Cons streams print as flat parenthesized chains (h1 :: h2 :: 'a).

#include <string>

#include "lmu/scl/term.hpp"

namespace lmu {
namespace detail {

inline void scl_print(std::string& out, const SclTerm& t, int prec);

inline void scl_print_chain(std::string& out, const SclStream& s) {
  const SclStream* cur = &s;
  while (cur->kind() == SclStreamKind::Cons) {
    scl_print(out, cur->head(), 1);
    out += " :: ";
    cur = &cur->tail();
  }
  out += '\'';
  out += cur->name();
}

inline void scl_print_stream(std::string& out, const SclStream& s) {
  if (s.kind() == SclStreamKind::Var) {
    out += '\'';
    out += s.name();
    return;
  }
  out += '(';
  scl_print_chain(out, s);
  out += ')';
}

// prec 1: chain position, 2: argument position.
inline void scl_print(std::string& out, const SclTerm& t, int prec) {
  switch (t.kind()) {
    case SclTermKind::Var:
      out += t.name();
      return;
    case SclTermKind::Const:
      out += const_name(t.cst());
      return;
    case SclTermKind::App:
      if (prec > 1) out += '(';
      scl_print(out, t.fun(), 1);
      out += ' ';
      scl_print(out, t.arg(), 2);
      if (prec > 1) out += ')';
      return;
    case SclTermKind::SApp:
      if (prec > 1) out += '(';
      scl_print(out, t.fun(), 1);
      out += " * ";
      scl_print_stream(out, t.stream());
      if (prec > 1) out += ')';
      return;
  }
}

}  // namespace detail

inline std::string to_text(const SclTerm& t) {
  if (!t.valid()) return "<invalid>";
  std::string out;
  detail::scl_print(out, t, 1);
  return out;
}

inline std::string to_text(const SclStream& s) {
  if (!s.valid()) return "<invalid>";
  std::string out;
  detail::scl_print_chain(out, s);
  return out;
}

}  // namespace lmu
