#pragma once

// Both directions between the calculi.
//
// Toward combinators: lam_star/mu_star are bracket abstraction, one clause
// per shape, recursing on a measure that the cons clause strictly decreases;
// where clauses overlap, lam_star prefers the vacuous K0 clause while
// mu_star keeps stream applications structural. to_scl applies them under
// each binder, naming binders deterministically the same way the printer
// does.
//
// Toward binders: each constant gets its defining lambda-mu term and
// streams act as applicative contexts, a cons feeding its head as the next
// argument.

#include <set>
#include <string>
#include <vector>

#include "lmu/common.hpp"
#include "lmu/lm/term.hpp"
#include "lmu/scl/term.hpp"

namespace lmu {

inline SclTerm lam_star(const TermVar& x, const SclTerm& t) {
  const SclTerm k0 = SclTerm::constant(SclConst::K0);
  if (t.kind() == SclTermKind::Var && t.name() == x.name)
    return SclTerm::app(SclTerm::app(SclTerm::constant(SclConst::S0), k0), k0);
  if (!occurs(t, x)) return SclTerm::app(k0, t);
  if (t.kind() == SclTermKind::App)
    return SclTerm::app(
        SclTerm::app(SclTerm::constant(SclConst::S0), lam_star(x, t.fun())),
        lam_star(x, t.arg()));
  // t is a stream application with x free somewhere in it
  const SclStream& s = t.stream();
  if (s.kind() == SclStreamKind::Var)
    return SclTerm::sapp(
        SclTerm::app(SclTerm::constant(SclConst::C10), lam_star(x, t.fun())), s);
  return lam_star(x, SclTerm::sapp(SclTerm::app(t.fun(), s.head()), s.tail()));
}

inline SclTerm mu_star(const StreamVar& a, const SclTerm& t) {
  if (t.kind() == SclTermKind::SApp) {
    const SclStream& s = t.stream();
    if (s.kind() == SclStreamKind::Var) {
      if (s.name() == a.name)
        return SclTerm::app(SclTerm::constant(SclConst::W1), mu_star(a, t.fun()));
      return SclTerm::sapp(
          SclTerm::app(SclTerm::constant(SclConst::C11), mu_star(a, t.fun())), s);
    }
    return mu_star(a, SclTerm::sapp(SclTerm::app(t.fun(), s.head()), s.tail()));
  }
  if (!occurs(t, a)) return SclTerm::app(SclTerm::constant(SclConst::K1), t);
  // only applications can still mention 'a
  return SclTerm::app(
      SclTerm::app(SclTerm::constant(SclConst::S1), mu_star(a, t.fun())),
      mu_star(a, t.arg()));
}

namespace detail {

struct ToScl {
  std::set<std::string> used_t, used_s;
  std::vector<std::string> tnames, snames;
  int tc = 0, sc = 0;

  std::string tname(int depth) {
    while ((int)tnames.size() <= depth) {
      std::string c;
      do {
        c = "x" + std::to_string(tc++);
      } while (used_t.count(c));
      tnames.push_back(std::move(c));
    }
    return tnames[depth];
  }

  std::string sname(int depth) {
    while ((int)snames.size() <= depth) {
      std::string c;
      do {
        c = "a" + std::to_string(sc++);
      } while (used_s.count(c));
      snames.push_back(std::move(c));
    }
    return snames[depth];
  }

  SclTerm go(const LmTerm& t, int dt, int ds) {
    switch (t.kind()) {
      case LmKind::FreeVar:
        return SclTerm::var(t.name());
      case LmKind::BoundVar:
        if (t.index() >= dt)
          throw PreconditionError("term has a dangling bound variable");
        return SclTerm::var(tname(dt - 1 - t.index()));
      case LmKind::Lam: {
        std::string n = tname(dt);
        return lam_star(TermVar{n}, go(t.body(), dt + 1, ds));
      }
      case LmKind::Mu: {
        std::string n = sname(ds);
        return mu_star(StreamVar{n}, go(t.body(), dt, ds + 1));
      }
      case LmKind::App:
        return SclTerm::app(go(t.fun(), dt, ds), go(t.arg(), dt, ds));
      case LmKind::SApp: {
        const StreamRef& s = t.stream();
        std::string n;
        if (!s.is_bound()) {
          n = s.name();
        } else if (s.index() < ds) {
          n = sname(ds - 1 - s.index());
        } else {
          throw PreconditionError("term has a dangling bound stream variable");
        }
        return SclTerm::sapp(go(t.fun(), dt, ds), SclStream::var(n));
      }
    }
    throw PreconditionError("invalid term");
  }
};

}  // namespace detail

inline SclTerm to_scl(const LmTerm& t) {
  detail::ToScl w;
  auto [tv, sv] = free_vars(t);
  for (const auto& v : tv) w.used_t.insert(v.name);
  for (const auto& v : sv) w.used_s.insert(v.name);
  return w.go(t, 0, 0);
}

// The defining term of each constant.
inline const LmTerm& to_lm(SclConst c) {
  static const TermVar x{"x"}, y{"y"}, z{"z"};
  static const StreamVar a{"a"}, b{"b"};
  static const LmTerm k0 = LmTerm::lam(x, LmTerm::lam(y, LmTerm::var(x)));
  static const LmTerm k1 = LmTerm::lam(x, LmTerm::mu(a, LmTerm::var(x)));
  static const LmTerm s0 = LmTerm::lam(
      x, LmTerm::lam(y, LmTerm::lam(z, LmTerm::app(
                            LmTerm::app(LmTerm::var(x), LmTerm::var(z)),
                            LmTerm::app(LmTerm::var(y), LmTerm::var(z))))));
  static const LmTerm s1 = LmTerm::lam(
      x, LmTerm::lam(y, LmTerm::mu(a, LmTerm::app(LmTerm::sapp(LmTerm::var(x), a),
                                                  LmTerm::sapp(LmTerm::var(y), a)))));
  static const LmTerm c10 = LmTerm::lam(
      x, LmTerm::mu(a, LmTerm::lam(y, LmTerm::sapp(
                            LmTerm::app(LmTerm::var(x), LmTerm::var(y)), a))));
  static const LmTerm c11 = LmTerm::lam(
      x, LmTerm::mu(a, LmTerm::mu(b, LmTerm::sapp(LmTerm::sapp(LmTerm::var(x), b), a))));
  static const LmTerm w1 = LmTerm::lam(
      x, LmTerm::mu(a, LmTerm::sapp(LmTerm::sapp(LmTerm::var(x), a), a)));
  switch (c) {
    case SclConst::K0: return k0;
    case SclConst::K1: return k1;
    case SclConst::S0: return s0;
    case SclConst::S1: return s1;
    case SclConst::C10: return c10;
    case SclConst::C11: return c11;
    case SclConst::W1: return w1;
  }
  throw PreconditionError("invalid constant");
}

inline LmTerm to_lm(const SclTerm& t);

// A stream is an applicative context: cons heads become arguments, the
// final stream variable the stream application at the end.
inline LmTerm to_lm_ctx(const SclStream& s, const LmTerm& hole) {
  if (s.kind() == SclStreamKind::Var)
    return LmTerm::sapp(hole, StreamVar{s.name()});
  return to_lm_ctx(s.tail(), LmTerm::app(hole, to_lm(s.head())));
}

inline LmTerm to_lm(const SclTerm& t) {
  switch (t.kind()) {
    case SclTermKind::Var:
      return LmTerm::var(t.name());
    case SclTermKind::Const:
      return to_lm(t.cst());
    case SclTermKind::App:
      return LmTerm::app(to_lm(t.fun()), to_lm(t.arg()));
    case SclTermKind::SApp:
      return to_lm_ctx(t.stream(), to_lm(t.fun()));
  }
  throw PreconditionError("invalid term");
}

}  // namespace lmu
