#pragma once

// Deterministic pretty-printer. Binder names are assigned by binder depth,
// per sort (x0, x1, ... and a0, a1, ...), skipping any name that occurs
// free in the whole term, so printing never captures and equal terms
// always print identically.

#include <set>
#include <string>
#include <vector>

#include "lmu/lm/term.hpp"

namespace lmu {
namespace detail {

struct LmPrinter {
  std::set<std::string> used_term, used_stream;
  std::vector<std::string> tnames, snames;
  int tcounter = 0, scounter = 0;

  const std::string& term_name(int depth) {
    while ((int)tnames.size() <= depth) {
      std::string c;
      do {
        c = "x" + std::to_string(tcounter++);
      } while (used_term.count(c));
      tnames.push_back(std::move(c));
    }
    return tnames[depth];
  }

  const std::string& stream_name(int depth) {
    while ((int)snames.size() <= depth) {
      std::string c;
      do {
        c = "a" + std::to_string(scounter++);
      } while (used_stream.count(c));
      snames.push_back(std::move(c));
    }
    return snames[depth];
  }

  // prec 0: binders allowed; 1: application spine; 2: atom position.
  void p(std::string& out, const LmTerm& t, int dt, int ds, int prec) {
    switch (t.kind()) {
      case LmKind::FreeVar:
        out += t.name();
        return;
      case LmKind::BoundVar:
        if (t.index() < dt) out += term_name(dt - 1 - t.index());
        else out += "_t" + std::to_string(t.index() - dt);
        return;
      case LmKind::Lam: {
        if (prec > 0) out += '(';
        out += '\\';
        out += term_name(dt);
        out += ". ";
        p(out, t.body(), dt + 1, ds, 0);
        if (prec > 0) out += ')';
        return;
      }
      case LmKind::Mu: {
        if (prec > 0) out += '(';
        out += "#'";
        out += stream_name(ds);
        out += ". ";
        p(out, t.body(), dt, ds + 1, 0);
        if (prec > 0) out += ')';
        return;
      }
      case LmKind::App: {
        if (prec > 1) out += '(';
        p(out, t.fun(), dt, ds, 1);
        out += ' ';
        p(out, t.arg(), dt, ds, 2);
        if (prec > 1) out += ')';
        return;
      }
      case LmKind::SApp: {
        if (prec > 1) out += '(';
        p(out, t.fun(), dt, ds, 1);
        out += " '";
        const StreamRef& s = t.stream();
        if (!s.is_bound()) out += s.name();
        else if (s.index() < ds) out += stream_name(ds - 1 - s.index());
        else out += "_s" + std::to_string(s.index() - ds);
        if (prec > 1) out += ')';
        return;
      }
    }
  }
};

}  // namespace detail

inline std::string to_text(const LmTerm& t) {
  if (!t.valid()) return "<invalid>";
  detail::LmPrinter pr;
  auto [tv, sv] = free_vars(t);
  for (const auto& v : tv) pr.used_term.insert(v.name);
  for (const auto& v : sv) pr.used_stream.insert(v.name);
  std::string out;
  pr.p(out, t, 0, 0, 0);
  return out;
}

}  // namespace lmu
