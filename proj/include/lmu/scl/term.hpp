#pragma once

// Stream combinatory terms. Two sorts again: terms are variables, the seven
// constants, applications T U and stream applications T * S; streams are
// stream variables or cons cells (T :: S). There are no binders, so
// variables are plain names.
//
// measure() weights cons cells twice: the rewrite T * (U :: S) to
// (T U) * S keeps the constructor count and drops one cons, so the measure
// strictly decreases, which is what makes bracket abstraction terminate.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "lmu/common.hpp"
#include "lmu/lm/term.hpp"

namespace lmu {

enum class SclConst { K0, K1, S0, S1, C10, C11, W1 };

inline const char* const_name(SclConst c) {
  switch (c) {
    case SclConst::K0: return "K0";
    case SclConst::K1: return "K1";
    case SclConst::S0: return "S0";
    case SclConst::S1: return "S1";
    case SclConst::C10: return "C10";
    case SclConst::C11: return "C11";
    case SclConst::W1: return "W1";
  }
  return "?";
}

enum class SclTermKind { Var, Const, App, SApp };
enum class SclStreamKind { Var, Cons };

class SclStream;

namespace detail {
struct SclTermNode;
struct SclStreamNode;
}

class SclTerm {
 public:
  SclTerm() = default;

  static SclTerm var(const TermVar& x) { return var(x.name); }
  static SclTerm var(std::string name);
  static SclTerm constant(SclConst c);
  static SclTerm app(const SclTerm& f, const SclTerm& a);
  static SclTerm sapp(const SclTerm& f, const SclStream& s);

  bool valid() const { return n_ != nullptr; }
  SclTermKind kind() const;
  const std::string& name() const;   // Var
  SclConst cst() const;              // Const
  const SclTerm& fun() const;        // App, SApp
  const SclTerm& arg() const;        // App
  const SclStream& stream() const;   // SApp

  std::int64_t node_count() const;
  std::int64_t cons_count() const;
  std::int64_t measure() const { return node_count() + cons_count(); }

  bool operator==(const SclTerm& o) const;
  bool identical(const SclTerm& o) const { return n_ == o.n_; }

 private:
  std::shared_ptr<const detail::SclTermNode> n_;
  static SclTerm make(detail::SclTermNode n);
};

class SclStream {
 public:
  SclStream() = default;

  static SclStream var(const StreamVar& a) { return var(a.name); }
  static SclStream var(std::string name);
  static SclStream cons(const SclTerm& h, const SclStream& t);

  bool valid() const { return n_ != nullptr; }
  SclStreamKind kind() const;
  const std::string& name() const;   // Var
  const SclTerm& head() const;       // Cons
  const SclStream& tail() const;     // Cons

  std::int64_t node_count() const;
  std::int64_t cons_count() const;
  std::int64_t measure() const { return node_count() + cons_count(); }

  bool operator==(const SclStream& o) const;
  bool identical(const SclStream& o) const { return n_ == o.n_; }

 private:
  std::shared_ptr<const detail::SclStreamNode> n_;
  static SclStream make(detail::SclStreamNode n);
};

namespace detail {

struct SclTermNode {
  SclTermKind kind;
  std::string name;     // Var
  SclConst cst = SclConst::K0;
  SclTerm a, b;         // fun / arg
  SclStream s;          // SApp
  std::int64_t nodes = 1, conses = 0;
};

struct SclStreamNode {
  SclStreamKind kind;
  std::string name;     // Var
  SclTerm head;
  SclStream tail;
  std::int64_t nodes = 1, conses = 0;
};

}  // namespace detail

inline SclTerm SclTerm::make(detail::SclTermNode n) {
  SclTerm t;
  t.n_ = std::make_shared<const detail::SclTermNode>(std::move(n));
  return t;
}

inline SclStream SclStream::make(detail::SclStreamNode n) {
  SclStream s;
  s.n_ = std::make_shared<const detail::SclStreamNode>(std::move(n));
  return s;
}

inline SclTerm SclTerm::var(std::string name) {
  detail::SclTermNode n;
  n.kind = SclTermKind::Var;
  n.name = std::move(name);
  return make(std::move(n));
}

inline SclTerm SclTerm::constant(SclConst c) {
  detail::SclTermNode n;
  n.kind = SclTermKind::Const;
  n.cst = c;
  return make(std::move(n));
}

inline SclTerm SclTerm::app(const SclTerm& f, const SclTerm& a) {
  detail::SclTermNode n;
  n.kind = SclTermKind::App;
  n.a = f;
  n.b = a;
  n.nodes = 1 + f.node_count() + a.node_count();
  n.conses = f.cons_count() + a.cons_count();
  return make(std::move(n));
}

inline SclTerm SclTerm::sapp(const SclTerm& f, const SclStream& s) {
  detail::SclTermNode n;
  n.kind = SclTermKind::SApp;
  n.a = f;
  n.s = s;
  n.nodes = 1 + f.node_count() + s.node_count();
  n.conses = f.cons_count() + s.cons_count();
  return make(std::move(n));
}

inline SclStream SclStream::var(std::string name) {
  detail::SclStreamNode n;
  n.kind = SclStreamKind::Var;
  n.name = std::move(name);
  return make(std::move(n));
}

inline SclStream SclStream::cons(const SclTerm& h, const SclStream& t) {
  detail::SclStreamNode n;
  n.kind = SclStreamKind::Cons;
  n.head = h;
  n.tail = t;
  n.nodes = 1 + h.node_count() + t.node_count();
  n.conses = 1 + h.cons_count() + t.cons_count();
  return make(std::move(n));
}

inline SclTermKind SclTerm::kind() const { return n_->kind; }
inline const std::string& SclTerm::name() const { return n_->name; }
inline SclConst SclTerm::cst() const { return n_->cst; }
inline const SclTerm& SclTerm::fun() const { return n_->a; }
inline const SclTerm& SclTerm::arg() const { return n_->b; }
inline const SclStream& SclTerm::stream() const { return n_->s; }
inline std::int64_t SclTerm::node_count() const { return n_->nodes; }
inline std::int64_t SclTerm::cons_count() const { return n_->conses; }

inline SclStreamKind SclStream::kind() const { return n_->kind; }
inline const std::string& SclStream::name() const { return n_->name; }
inline const SclTerm& SclStream::head() const { return n_->head; }
inline const SclStream& SclStream::tail() const { return n_->tail; }
inline std::int64_t SclStream::node_count() const { return n_->nodes; }
inline std::int64_t SclStream::cons_count() const { return n_->conses; }

inline bool SclTerm::operator==(const SclTerm& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->kind != o.n_->kind || n_->nodes != o.n_->nodes ||
      n_->conses != o.n_->conses)
    return false;
  switch (n_->kind) {
    case SclTermKind::Var: return n_->name == o.n_->name;
    case SclTermKind::Const: return n_->cst == o.n_->cst;
    case SclTermKind::App: return n_->a == o.n_->a && n_->b == o.n_->b;
    case SclTermKind::SApp: return n_->a == o.n_->a && n_->s == o.n_->s;
  }
  return false;
}

inline bool SclStream::operator==(const SclStream& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->kind != o.n_->kind || n_->nodes != o.n_->nodes) return false;
  switch (n_->kind) {
    case SclStreamKind::Var: return n_->name == o.n_->name;
    case SclStreamKind::Cons:
      return n_->head == o.n_->head && n_->tail == o.n_->tail;
  }
  return false;
}

namespace detail {

inline void scl_collect_free(const SclTerm& t, std::set<TermVar>& tv,
                             std::set<StreamVar>& sv);

inline void scl_collect_free(const SclStream& s, std::set<TermVar>& tv,
                             std::set<StreamVar>& sv) {
  if (s.kind() == SclStreamKind::Var) {
    sv.insert(StreamVar{s.name()});
    return;
  }
  scl_collect_free(s.head(), tv, sv);
  scl_collect_free(s.tail(), tv, sv);
}

inline void scl_collect_free(const SclTerm& t, std::set<TermVar>& tv,
                             std::set<StreamVar>& sv) {
  switch (t.kind()) {
    case SclTermKind::Var: tv.insert(TermVar{t.name()}); return;
    case SclTermKind::Const: return;
    case SclTermKind::App:
      scl_collect_free(t.fun(), tv, sv);
      scl_collect_free(t.arg(), tv, sv);
      return;
    case SclTermKind::SApp:
      scl_collect_free(t.fun(), tv, sv);
      scl_collect_free(t.stream(), tv, sv);
      return;
  }
}

}  // namespace detail

inline std::pair<std::set<TermVar>, std::set<StreamVar>> free_vars(const SclTerm& t) {
  std::pair<std::set<TermVar>, std::set<StreamVar>> r;
  detail::scl_collect_free(t, r.first, r.second);
  return r;
}

inline std::pair<std::set<TermVar>, std::set<StreamVar>> free_vars(const SclStream& s) {
  std::pair<std::set<TermVar>, std::set<StreamVar>> r;
  detail::scl_collect_free(s, r.first, r.second);
  return r;
}

inline bool occurs(const SclTerm& t, const TermVar& x);
inline bool occurs(const SclTerm& t, const StreamVar& a);

inline bool occurs(const SclStream& s, const TermVar& x) {
  if (s.kind() == SclStreamKind::Var) return false;
  return occurs(s.head(), x) || occurs(s.tail(), x);
}

inline bool occurs(const SclStream& s, const StreamVar& a) {
  if (s.kind() == SclStreamKind::Var) return s.name() == a.name;
  return occurs(s.head(), a) || occurs(s.tail(), a);
}

inline bool occurs(const SclTerm& t, const TermVar& x) {
  switch (t.kind()) {
    case SclTermKind::Var: return t.name() == x.name;
    case SclTermKind::Const: return false;
    case SclTermKind::App: return occurs(t.fun(), x) || occurs(t.arg(), x);
    case SclTermKind::SApp: return occurs(t.fun(), x) || occurs(t.stream(), x);
  }
  return false;
}

inline bool occurs(const SclTerm& t, const StreamVar& a) {
  switch (t.kind()) {
    case SclTermKind::Var:
    case SclTermKind::Const:
      return false;
    case SclTermKind::App: return occurs(t.fun(), a) || occurs(t.arg(), a);
    case SclTermKind::SApp: return occurs(t.fun(), a) || occurs(t.stream(), a);
  }
  return false;
}

inline SclTerm subst(const SclTerm& t, const TermVar& x, const SclTerm& u);
inline SclStream subst(const SclStream& s, const TermVar& x, const SclTerm& u);
inline SclTerm subst(const SclTerm& t, const StreamVar& a, const SclStream& s2);
inline SclStream subst(const SclStream& s, const StreamVar& a, const SclStream& s2);

inline SclStream subst(const SclStream& s, const TermVar& x, const SclTerm& u) {
  if (s.kind() == SclStreamKind::Var) return s;
  SclTerm h = subst(s.head(), x, u);
  SclStream t = subst(s.tail(), x, u);
  return h.identical(s.head()) && t.identical(s.tail()) ? s : SclStream::cons(h, t);
}

inline SclTerm subst(const SclTerm& t, const TermVar& x, const SclTerm& u) {
  switch (t.kind()) {
    case SclTermKind::Var: return t.name() == x.name ? u : t;
    case SclTermKind::Const: return t;
    case SclTermKind::App: {
      SclTerm f = subst(t.fun(), x, u);
      SclTerm a = subst(t.arg(), x, u);
      return f.identical(t.fun()) && a.identical(t.arg()) ? t : SclTerm::app(f, a);
    }
    case SclTermKind::SApp: {
      SclTerm f = subst(t.fun(), x, u);
      SclStream s = subst(t.stream(), x, u);
      return f.identical(t.fun()) && s.identical(t.stream()) ? t
                                                             : SclTerm::sapp(f, s);
    }
  }
  return t;
}

inline SclStream subst(const SclStream& s, const StreamVar& a, const SclStream& s2) {
  if (s.kind() == SclStreamKind::Var) return s.name() == a.name ? s2 : s;
  SclTerm h = subst(s.head(), a, s2);
  SclStream t = subst(s.tail(), a, s2);
  return h.identical(s.head()) && t.identical(s.tail()) ? s : SclStream::cons(h, t);
}

inline SclTerm subst(const SclTerm& t, const StreamVar& a, const SclStream& s2) {
  switch (t.kind()) {
    case SclTermKind::Var:
    case SclTermKind::Const:
      return t;
    case SclTermKind::App: {
      SclTerm f = subst(t.fun(), a, s2);
      SclTerm g = subst(t.arg(), a, s2);
      return f.identical(t.fun()) && g.identical(t.arg()) ? t : SclTerm::app(f, g);
    }
    case SclTermKind::SApp: {
      SclTerm f = subst(t.fun(), a, s2);
      SclStream s = subst(t.stream(), a, s2);
      return f.identical(t.fun()) && s.identical(t.stream()) ? t
                                                             : SclTerm::sapp(f, s);
    }
  }
  return t;
}

}  // namespace lmu
