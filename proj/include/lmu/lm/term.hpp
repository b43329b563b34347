#pragma once

// Two-sorted terms: lambda binders over term variables and mu binders over
// stream variables, with stream application M 'a as a separate node.
//
// Representation is locally nameless with one de Bruijn counter per sort:
// a bound term variable counts enclosing lambda binders only, a bound
// stream variable counts enclosing mu binders only, and free variables of
// either sort keep their names. Structural equality is therefore exactly
// alpha-equivalence, and free names can never be captured.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lmu/common.hpp"

namespace lmu {

struct TermVar {
  std::string name;
  auto operator<=>(const TermVar&) const = default;
};

struct StreamVar {
  std::string name;
  auto operator<=>(const StreamVar&) const = default;
};

// A stream position: either a free stream variable or an index counting
// enclosing mu binders.
class StreamRef {
 public:
  static StreamRef free(const StreamVar& v) {
    StreamRef r;
    r.name_ = v.name;
    return r;
  }
  static StreamRef bound(int k) {
    StreamRef r;
    r.index_ = k;
    return r;
  }

  bool is_bound() const { return index_ >= 0; }
  int index() const { return index_; }
  const std::string& name() const { return name_; }

  bool operator==(const StreamRef&) const = default;

 private:
  int index_ = -1;
  std::string name_;
};

enum class LmKind { FreeVar, BoundVar, Lam, App, Mu, SApp };

namespace detail {
struct LmNode;
}

class LmTerm {
 public:
  LmTerm() = default;

  static LmTerm var(const TermVar& x) { return var(x.name); }
  static LmTerm var(std::string name);
  static LmTerm bound(int index);
  // Binding constructors close over free occurrences of the given name.
  static LmTerm lam(const TermVar& x, const LmTerm& body);
  static LmTerm mu(const StreamVar& a, const LmTerm& body);
  static LmTerm app(const LmTerm& f, const LmTerm& a);
  static LmTerm sapp(const LmTerm& f, const StreamVar& a) {
    return sapp_raw(f, StreamRef::free(a));
  }
  // Raw constructors take already-shifted bodies; used by the internals.
  static LmTerm lam_raw(const LmTerm& body);
  static LmTerm mu_raw(const LmTerm& body);
  static LmTerm sapp_raw(const LmTerm& f, const StreamRef& s);

  bool valid() const { return n_ != nullptr; }
  LmKind kind() const;
  std::int64_t size() const;           // node count
  const std::string& name() const;     // FreeVar
  int index() const;                   // BoundVar
  const LmTerm& fun() const;           // App, SApp
  const LmTerm& arg() const;           // App
  const LmTerm& body() const;          // Lam, Mu
  const StreamRef& stream() const;     // SApp

  // Structural equality; with this representation it is alpha-equivalence.
  bool operator==(const LmTerm& o) const;
  bool identical(const LmTerm& o) const { return n_ == o.n_; }

 private:
  std::shared_ptr<const detail::LmNode> n_;
  static LmTerm make(detail::LmNode n);
};

namespace detail {

struct LmNode {
  LmKind kind;
  int index = 0;        // BoundVar
  std::string name;     // FreeVar
  LmTerm a;             // fun / body
  LmTerm b;             // arg
  StreamRef sref;       // SApp
  std::int64_t size = 1;
};

}  // namespace detail

inline LmTerm LmTerm::make(detail::LmNode n) {
  LmTerm t;
  t.n_ = std::make_shared<const detail::LmNode>(std::move(n));
  return t;
}

inline LmTerm LmTerm::var(std::string name) {
  detail::LmNode n;
  n.kind = LmKind::FreeVar;
  n.name = std::move(name);
  return make(std::move(n));
}

inline LmTerm LmTerm::bound(int index) {
  detail::LmNode n;
  n.kind = LmKind::BoundVar;
  n.index = index;
  return make(std::move(n));
}

inline LmTerm LmTerm::lam_raw(const LmTerm& body) {
  detail::LmNode n;
  n.kind = LmKind::Lam;
  n.a = body;
  n.size = 1 + body.size();
  return make(std::move(n));
}

inline LmTerm LmTerm::mu_raw(const LmTerm& body) {
  detail::LmNode n;
  n.kind = LmKind::Mu;
  n.a = body;
  n.size = 1 + body.size();
  return make(std::move(n));
}

inline LmTerm LmTerm::app(const LmTerm& f, const LmTerm& a) {
  detail::LmNode n;
  n.kind = LmKind::App;
  n.a = f;
  n.b = a;
  n.size = 1 + f.size() + a.size();
  return make(std::move(n));
}

inline LmTerm LmTerm::sapp_raw(const LmTerm& f, const StreamRef& s) {
  detail::LmNode n;
  n.kind = LmKind::SApp;
  n.a = f;
  n.sref = s;
  n.size = 1 + f.size();
  return make(std::move(n));
}

inline LmKind LmTerm::kind() const { return n_->kind; }
inline std::int64_t LmTerm::size() const { return n_->size; }
inline const std::string& LmTerm::name() const { return n_->name; }
inline int LmTerm::index() const { return n_->index; }
inline const LmTerm& LmTerm::fun() const { return n_->a; }
inline const LmTerm& LmTerm::arg() const { return n_->b; }
inline const LmTerm& LmTerm::body() const { return n_->a; }
inline const StreamRef& LmTerm::stream() const { return n_->sref; }

inline bool LmTerm::operator==(const LmTerm& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->kind != o.n_->kind || n_->size != o.n_->size) return false;
  switch (n_->kind) {
    case LmKind::FreeVar: return n_->name == o.n_->name;
    case LmKind::BoundVar: return n_->index == o.n_->index;
    case LmKind::Lam:
    case LmKind::Mu: return n_->a == o.n_->a;
    case LmKind::App: return n_->a == o.n_->a && n_->b == o.n_->b;
    case LmKind::SApp: return n_->sref == o.n_->sref && n_->a == o.n_->a;
  }
  return false;
}

namespace detail {

// Shift dangling indices: term indices >= ct by dt, stream indices >= cs
// by ds. Unchanged subtrees are returned as-is so substitution shares
// structure aggressively.
inline LmTerm shift(const LmTerm& t, int dt, int ds, int ct, int cs) {
  if (dt == 0 && ds == 0) return t;
  switch (t.kind()) {
    case LmKind::FreeVar:
      return t;
    case LmKind::BoundVar:
      return t.index() >= ct ? LmTerm::bound(t.index() + dt) : t;
    case LmKind::Lam: {
      LmTerm b = shift(t.body(), dt, ds, ct + 1, cs);
      return b.identical(t.body()) ? t : LmTerm::lam_raw(b);
    }
    case LmKind::Mu: {
      LmTerm b = shift(t.body(), dt, ds, ct, cs + 1);
      return b.identical(t.body()) ? t : LmTerm::mu_raw(b);
    }
    case LmKind::App: {
      LmTerm f = shift(t.fun(), dt, ds, ct, cs);
      LmTerm a = shift(t.arg(), dt, ds, ct, cs);
      return f.identical(t.fun()) && a.identical(t.arg()) ? t : LmTerm::app(f, a);
    }
    case LmKind::SApp: {
      LmTerm f = shift(t.fun(), dt, ds, ct, cs);
      StreamRef s = t.stream();
      if (s.is_bound() && s.index() >= cs) s = StreamRef::bound(s.index() + ds);
      return f.identical(t.fun()) && s == t.stream() ? t : LmTerm::sapp_raw(f, s);
    }
  }
  return t;
}

// Close a free term variable into the lambda binder at depth dt.
inline LmTerm close_term(const LmTerm& t, const std::string& x, int dt) {
  switch (t.kind()) {
    case LmKind::FreeVar:
      return t.name() == x ? LmTerm::bound(dt) : t;
    case LmKind::BoundVar:
      return t;
    case LmKind::Lam: {
      LmTerm b = close_term(t.body(), x, dt + 1);
      return b.identical(t.body()) ? t : LmTerm::lam_raw(b);
    }
    case LmKind::Mu: {
      LmTerm b = close_term(t.body(), x, dt);
      return b.identical(t.body()) ? t : LmTerm::mu_raw(b);
    }
    case LmKind::App: {
      LmTerm f = close_term(t.fun(), x, dt);
      LmTerm a = close_term(t.arg(), x, dt);
      return f.identical(t.fun()) && a.identical(t.arg()) ? t : LmTerm::app(f, a);
    }
    case LmKind::SApp: {
      LmTerm f = close_term(t.fun(), x, dt);
      return f.identical(t.fun()) ? t : LmTerm::sapp_raw(f, t.stream());
    }
  }
  return t;
}

// Close a free stream variable into the mu binder at depth ds.
inline LmTerm close_stream(const LmTerm& t, const std::string& a, int ds) {
  switch (t.kind()) {
    case LmKind::FreeVar:
    case LmKind::BoundVar:
      return t;
    case LmKind::Lam: {
      LmTerm b = close_stream(t.body(), a, ds);
      return b.identical(t.body()) ? t : LmTerm::lam_raw(b);
    }
    case LmKind::Mu: {
      LmTerm b = close_stream(t.body(), a, ds + 1);
      return b.identical(t.body()) ? t : LmTerm::mu_raw(b);
    }
    case LmKind::App: {
      LmTerm f = close_stream(t.fun(), a, ds);
      LmTerm g = close_stream(t.arg(), a, ds);
      return f.identical(t.fun()) && g.identical(t.arg()) ? t : LmTerm::app(f, g);
    }
    case LmKind::SApp: {
      LmTerm f = close_stream(t.fun(), a, ds);
      StreamRef s = t.stream();
      if (!s.is_bound() && s.name() == a) s = StreamRef::bound(ds);
      return f.identical(t.fun()) && s == t.stream() ? t : LmTerm::sapp_raw(f, s);
    }
  }
  return t;
}

// Substitute n for the lambda binder being removed (index j at entry depth);
// indices above j shift down. nt/ns count binders crossed since the redex,
// so n is shifted by them when inserted.
inline LmTerm open_term_rec(const LmTerm& t, int j, const LmTerm& n, int nt, int ns) {
  switch (t.kind()) {
    case LmKind::FreeVar:
      return t;
    case LmKind::BoundVar:
      if (t.index() == j) return shift(n, nt, ns, 0, 0);
      if (t.index() > j) return LmTerm::bound(t.index() - 1);
      return t;
    case LmKind::Lam: {
      LmTerm b = open_term_rec(t.body(), j + 1, n, nt + 1, ns);
      return b.identical(t.body()) ? t : LmTerm::lam_raw(b);
    }
    case LmKind::Mu: {
      LmTerm b = open_term_rec(t.body(), j, n, nt, ns + 1);
      return b.identical(t.body()) ? t : LmTerm::mu_raw(b);
    }
    case LmKind::App: {
      LmTerm f = open_term_rec(t.fun(), j, n, nt, ns);
      LmTerm a = open_term_rec(t.arg(), j, n, nt, ns);
      return f.identical(t.fun()) && a.identical(t.arg()) ? t : LmTerm::app(f, a);
    }
    case LmKind::SApp: {
      LmTerm f = open_term_rec(t.fun(), j, n, nt, ns);
      return f.identical(t.fun()) ? t : LmTerm::sapp_raw(f, t.stream());
    }
  }
  return t;
}

inline LmTerm open_term(const LmTerm& lam_body, const LmTerm& n) {
  return open_term_rec(lam_body, 0, n, 0, 0);
}

inline StreamRef shift_ref(const StreamRef& s, int ds) {
  return s.is_bound() ? StreamRef::bound(s.index() + ds) : s;
}

// Substitute stream s for the mu binder being removed.
inline LmTerm open_stream_rec(const LmTerm& t, int j, const StreamRef& s, int ns) {
  switch (t.kind()) {
    case LmKind::FreeVar:
    case LmKind::BoundVar:
      return t;
    case LmKind::Lam: {
      LmTerm b = open_stream_rec(t.body(), j, s, ns);
      return b.identical(t.body()) ? t : LmTerm::lam_raw(b);
    }
    case LmKind::Mu: {
      LmTerm b = open_stream_rec(t.body(), j + 1, s, ns + 1);
      return b.identical(t.body()) ? t : LmTerm::mu_raw(b);
    }
    case LmKind::App: {
      LmTerm f = open_stream_rec(t.fun(), j, s, ns);
      LmTerm a = open_stream_rec(t.arg(), j, s, ns);
      return f.identical(t.fun()) && a.identical(t.arg()) ? t : LmTerm::app(f, a);
    }
    case LmKind::SApp: {
      LmTerm f = open_stream_rec(t.fun(), j, s, ns);
      StreamRef r = t.stream();
      if (r.is_bound()) {
        if (r.index() == j) r = shift_ref(s, ns);
        else if (r.index() > j) r = StreamRef::bound(r.index() - 1);
      }
      return f.identical(t.fun()) && r == t.stream() ? t : LmTerm::sapp_raw(f, r);
    }
  }
  return t;
}

inline LmTerm open_stream(const LmTerm& mu_body, const StreamRef& s) {
  return open_stream_rec(mu_body, 0, s, 0);
}

// Structural insertion for the mu step: every stream application P 'j with
// j the binder being fed becomes (P n) 'j. The binder itself stays, so no
// index is removed; ns starts at 1 because the recursion begins inside it.
inline LmTerm insert_stream_arg_rec(const LmTerm& t, int j, const LmTerm& n,
                                    int nt, int ns) {
  switch (t.kind()) {
    case LmKind::FreeVar:
    case LmKind::BoundVar:
      return t;
    case LmKind::Lam: {
      LmTerm b = insert_stream_arg_rec(t.body(), j, n, nt + 1, ns);
      return b.identical(t.body()) ? t : LmTerm::lam_raw(b);
    }
    case LmKind::Mu: {
      LmTerm b = insert_stream_arg_rec(t.body(), j + 1, n, nt, ns + 1);
      return b.identical(t.body()) ? t : LmTerm::mu_raw(b);
    }
    case LmKind::App: {
      LmTerm f = insert_stream_arg_rec(t.fun(), j, n, nt, ns);
      LmTerm a = insert_stream_arg_rec(t.arg(), j, n, nt, ns);
      return f.identical(t.fun()) && a.identical(t.arg()) ? t : LmTerm::app(f, a);
    }
    case LmKind::SApp: {
      LmTerm f = insert_stream_arg_rec(t.fun(), j, n, nt, ns);
      if (t.stream().is_bound() && t.stream().index() == j)
        return LmTerm::sapp_raw(LmTerm::app(f, shift(n, nt, ns, 0, 0)), t.stream());
      return f.identical(t.fun()) ? t : LmTerm::sapp_raw(f, t.stream());
    }
  }
  return t;
}

inline LmTerm insert_stream_arg(const LmTerm& mu_body, const LmTerm& n) {
  return insert_stream_arg_rec(mu_body, 0, n, 0, 1);
}

// Remove the lambda binder at cut; fails if the binder is used.
inline std::optional<LmTerm> strip_bound_term(const LmTerm& t, int cut) {
  switch (t.kind()) {
    case LmKind::FreeVar:
      return t;
    case LmKind::BoundVar:
      if (t.index() == cut) return std::nullopt;
      if (t.index() > cut) return LmTerm::bound(t.index() - 1);
      return t;
    case LmKind::Lam: {
      auto b = strip_bound_term(t.body(), cut + 1);
      if (!b) return std::nullopt;
      return LmTerm::lam_raw(*b);
    }
    case LmKind::Mu: {
      auto b = strip_bound_term(t.body(), cut);
      if (!b) return std::nullopt;
      return LmTerm::mu_raw(*b);
    }
    case LmKind::App: {
      auto f = strip_bound_term(t.fun(), cut);
      if (!f) return std::nullopt;
      auto a = strip_bound_term(t.arg(), cut);
      if (!a) return std::nullopt;
      return LmTerm::app(*f, *a);
    }
    case LmKind::SApp: {
      auto f = strip_bound_term(t.fun(), cut);
      if (!f) return std::nullopt;
      return LmTerm::sapp_raw(*f, t.stream());
    }
  }
  return std::nullopt;
}

// Remove the mu binder at cut; fails if the binder is used.
inline std::optional<LmTerm> strip_bound_stream(const LmTerm& t, int cut) {
  switch (t.kind()) {
    case LmKind::FreeVar:
    case LmKind::BoundVar:
      return t;
    case LmKind::Lam: {
      auto b = strip_bound_stream(t.body(), cut);
      if (!b) return std::nullopt;
      return LmTerm::lam_raw(*b);
    }
    case LmKind::Mu: {
      auto b = strip_bound_stream(t.body(), cut + 1);
      if (!b) return std::nullopt;
      return LmTerm::mu_raw(*b);
    }
    case LmKind::App: {
      auto f = strip_bound_stream(t.fun(), cut);
      if (!f) return std::nullopt;
      auto a = strip_bound_stream(t.arg(), cut);
      if (!a) return std::nullopt;
      return LmTerm::app(*f, *a);
    }
    case LmKind::SApp: {
      auto f = strip_bound_stream(t.fun(), cut);
      if (!f) return std::nullopt;
      StreamRef s = t.stream();
      if (s.is_bound()) {
        if (s.index() == cut) return std::nullopt;
        if (s.index() > cut) s = StreamRef::bound(s.index() - 1);
      }
      return LmTerm::sapp_raw(*f, s);
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline LmTerm LmTerm::lam(const TermVar& x, const LmTerm& body) {
  return lam_raw(detail::close_term(body, x.name, 0));
}

inline LmTerm LmTerm::mu(const StreamVar& a, const LmTerm& body) {
  return mu_raw(detail::close_stream(body, a.name, 0));
}

namespace detail {

inline void collect_free(const LmTerm& t, std::set<TermVar>& tv,
                         std::set<StreamVar>& sv) {
  switch (t.kind()) {
    case LmKind::FreeVar:
      tv.insert(TermVar{t.name()});
      return;
    case LmKind::BoundVar:
      return;
    case LmKind::Lam:
    case LmKind::Mu:
      collect_free(t.body(), tv, sv);
      return;
    case LmKind::App:
      collect_free(t.fun(), tv, sv);
      collect_free(t.arg(), tv, sv);
      return;
    case LmKind::SApp:
      collect_free(t.fun(), tv, sv);
      if (!t.stream().is_bound()) sv.insert(StreamVar{t.stream().name()});
      return;
  }
}

}  // namespace detail

inline std::pair<std::set<TermVar>, std::set<StreamVar>> free_vars(const LmTerm& t) {
  std::pair<std::set<TermVar>, std::set<StreamVar>> r;
  detail::collect_free(t, r.first, r.second);
  return r;
}

inline bool alpha_eq(const LmTerm& m, const LmTerm& n) { return m == n; }

namespace detail {

inline LmTerm subst_term_rec(const LmTerm& t, const std::string& x,
                             const LmTerm& n, int nt, int ns) {
  switch (t.kind()) {
    case LmKind::FreeVar:
      return t.name() == x ? shift(n, nt, ns, 0, 0) : t;
    case LmKind::BoundVar:
      return t;
    case LmKind::Lam: {
      LmTerm b = subst_term_rec(t.body(), x, n, nt + 1, ns);
      return b.identical(t.body()) ? t : LmTerm::lam_raw(b);
    }
    case LmKind::Mu: {
      LmTerm b = subst_term_rec(t.body(), x, n, nt, ns + 1);
      return b.identical(t.body()) ? t : LmTerm::mu_raw(b);
    }
    case LmKind::App: {
      LmTerm f = subst_term_rec(t.fun(), x, n, nt, ns);
      LmTerm a = subst_term_rec(t.arg(), x, n, nt, ns);
      return f.identical(t.fun()) && a.identical(t.arg()) ? t : LmTerm::app(f, a);
    }
    case LmKind::SApp: {
      LmTerm f = subst_term_rec(t.fun(), x, n, nt, ns);
      return f.identical(t.fun()) ? t : LmTerm::sapp_raw(f, t.stream());
    }
  }
  return t;
}

}  // namespace detail

// Capture-avoiding substitution of n for the free term variable x.
inline LmTerm subst_term(const LmTerm& m, const TermVar& x, const LmTerm& n) {
  return detail::subst_term_rec(m, x.name, n, 0, 0);
}

// Rename the free stream variable a to b.
inline LmTerm rename_stream(const LmTerm& m, const StreamVar& a, const StreamVar& b) {
  struct Rec {
    const std::string& from;
    const std::string& to;
    LmTerm go(const LmTerm& t) const {
      switch (t.kind()) {
        case LmKind::FreeVar:
        case LmKind::BoundVar:
          return t;
        case LmKind::Lam: {
          LmTerm x = go(t.body());
          return x.identical(t.body()) ? t : LmTerm::lam_raw(x);
        }
        case LmKind::Mu: {
          LmTerm x = go(t.body());
          return x.identical(t.body()) ? t : LmTerm::mu_raw(x);
        }
        case LmKind::App: {
          LmTerm f = go(t.fun());
          LmTerm a2 = go(t.arg());
          return f.identical(t.fun()) && a2.identical(t.arg()) ? t
                                                               : LmTerm::app(f, a2);
        }
        case LmKind::SApp: {
          LmTerm f = go(t.fun());
          StreamRef s = t.stream();
          if (!s.is_bound() && s.name() == from)
            s = StreamRef::free(StreamVar{to});
          return f.identical(t.fun()) && s == t.stream() ? t
                                                         : LmTerm::sapp_raw(f, s);
        }
      }
      return t;
    }
  };
  return Rec{a.name, b.name}.go(m);
}

// An applicative context [] N1 ... Nk 'tail.
struct LmContext {
  std::vector<LmTerm> args;
  StreamVar tail;
};

inline LmTerm plug(const LmContext& k, const LmTerm& m) {
  LmTerm r = m;
  for (const LmTerm& a : k.args) r = LmTerm::app(r, a);
  return LmTerm::sapp(r, k.tail);
}

namespace detail {

inline LmTerm ctx_subst_rec(const LmTerm& t, const std::string& a,
                            const LmContext& k, int nt, int ns) {
  switch (t.kind()) {
    case LmKind::FreeVar:
    case LmKind::BoundVar:
      return t;
    case LmKind::Lam: {
      LmTerm b = ctx_subst_rec(t.body(), a, k, nt + 1, ns);
      return b.identical(t.body()) ? t : LmTerm::lam_raw(b);
    }
    case LmKind::Mu: {
      LmTerm b = ctx_subst_rec(t.body(), a, k, nt, ns + 1);
      return b.identical(t.body()) ? t : LmTerm::mu_raw(b);
    }
    case LmKind::App: {
      LmTerm f = ctx_subst_rec(t.fun(), a, k, nt, ns);
      LmTerm g = ctx_subst_rec(t.arg(), a, k, nt, ns);
      return f.identical(t.fun()) && g.identical(t.arg()) ? t : LmTerm::app(f, g);
    }
    case LmKind::SApp: {
      LmTerm f = ctx_subst_rec(t.fun(), a, k, nt, ns);
      if (!t.stream().is_bound() && t.stream().name() == a) {
        LmTerm r = f;
        for (const LmTerm& n : k.args) r = LmTerm::app(r, shift(n, nt, ns, 0, 0));
        return LmTerm::sapp_raw(r, StreamRef::free(k.tail));
      }
      return f.identical(t.fun()) ? t : LmTerm::sapp_raw(f, t.stream());
    }
  }
  return t;
}

}  // namespace detail

// Replace every stream application P 'a by K[P].
inline LmTerm ctx_subst(const LmTerm& m, const StreamVar& a, const LmContext& k) {
  return detail::ctx_subst_rec(m, a.name, k, 0, 0);
}

// Replace every stream application P 'a by (P n) 'a.
inline LmTerm struct_subst(const LmTerm& m, const StreamVar& a, const LmTerm& n) {
  return ctx_subst(m, a, LmContext{{n}, a});
}

}  // namespace lmu
