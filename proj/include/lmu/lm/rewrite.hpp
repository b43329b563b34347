#pragma once

// Oriented rewrite rules, leftmost-outermost strategy:
//
//   beta_T  (\x. M) N      -> M[x := N]
//   beta_S  (#'a. M) 'b    -> M['a := 'b]
//   eta_T   \x. M x        -> M          (x not free in M)
//   eta_S   #'a. M 'a      -> M          ('a not free in M)
//   mu      (#'a. M) N     -> #'a. M[P 'a := P N 'a]
//   fst     #'a. M         -> \x. #'a. M[P 'a := P x 'a]
//
// mu and fst are alternative orientations of the same stream-feeding law;
// the stepper uses one of them, chosen by RewriteOptions. fst is only fired
// where the mu term is applied to an argument, which keeps it terminating
// exactly when mu is.
//
// The eta_T/mu pair is not confluent: \x. (#'a. M) x with x not free
// reduces to #'a. M by eta_T but to \x. #'a. M[P'a := Px'a] by mu, and
// both are normal forms. Equality therefore compares canonical forms,
// where every \x. #'a. ... whose x occurs exactly as the last argument
// fed to 'a is collapsed back to #'a. ... (the inverse of fst, which is
// sound because fst preserves convertibility).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmu/common.hpp"
#include "lmu/lm/term.hpp"

namespace lmu {

enum class LmRule { BetaT, BetaS, EtaT, EtaS, Mu, Fst };

inline const char* rule_name(LmRule r) {
  switch (r) {
    case LmRule::BetaT: return "beta_T";
    case LmRule::BetaS: return "beta_S";
    case LmRule::EtaT: return "eta_T";
    case LmRule::EtaS: return "eta_S";
    case LmRule::Mu: return "mu";
    case LmRule::Fst: return "fst";
  }
  return "?";
}

enum class MuStyle { Mu, Fst };

struct RewriteOptions {
  MuStyle mu_style = MuStyle::Mu;
};

// One reduction step: the rule, the path to the redex (child indices from
// the root: App 0=function 1=argument, SApp/Lam/Mu 0), and the whole term
// after the step.
struct LmStep {
  LmRule rule;
  std::vector<int> position;
  LmTerm result;
};

namespace detail {

// fst at a mu node: #'a. M -> \x. #'a. M[P 'a := P x 'a].
inline LmTerm fst_expand(const LmTerm& mu) {
  LmTerm lifted = shift(mu.body(), 1, 0, 0, 0);
  LmTerm fed = insert_stream_arg_rec(lifted, 0, LmTerm::bound(0), 0, 1);
  return LmTerm::lam_raw(LmTerm::mu_raw(fed));
}

inline std::optional<LmTerm> try_eta_t(const LmTerm& lam) {
  const LmTerm& b = lam.body();
  if (b.kind() != LmKind::App) return std::nullopt;
  if (!(b.arg().kind() == LmKind::BoundVar && b.arg().index() == 0))
    return std::nullopt;
  return strip_bound_term(b.fun(), 0);
}

inline std::optional<LmTerm> try_eta_s(const LmTerm& mu) {
  const LmTerm& b = mu.body();
  if (b.kind() != LmKind::SApp) return std::nullopt;
  if (!(b.stream().is_bound() && b.stream().index() == 0)) return std::nullopt;
  return strip_bound_stream(b.fun(), 0);
}

// Rules are keyed by node shape, so at most one rule matches at a node
// (in fst style an applied mu fires fst at the mu child). rpos collects
// the redex path in reverse on the way back up.
inline std::optional<LmTerm> step_rec(const LmTerm& t, MuStyle style,
                                      LmRule& rule, std::vector<int>& rpos) {
  switch (t.kind()) {
    case LmKind::FreeVar:
    case LmKind::BoundVar:
      return std::nullopt;
    case LmKind::App: {
      const LmTerm& f = t.fun();
      if (f.kind() == LmKind::Lam) {
        rule = LmRule::BetaT;
        return open_term(f.body(), t.arg());
      }
      if (f.kind() == LmKind::Mu) {
        if (style == MuStyle::Mu) {
          rule = LmRule::Mu;
          return LmTerm::mu_raw(insert_stream_arg(f.body(), t.arg()));
        }
        rule = LmRule::Fst;
        rpos.push_back(0);
        return LmTerm::app(fst_expand(f), t.arg());
      }
      if (auto r = step_rec(f, style, rule, rpos)) {
        rpos.push_back(0);
        return LmTerm::app(*r, t.arg());
      }
      if (auto r = step_rec(t.arg(), style, rule, rpos)) {
        rpos.push_back(1);
        return LmTerm::app(f, *r);
      }
      return std::nullopt;
    }
    case LmKind::SApp: {
      const LmTerm& f = t.fun();
      if (f.kind() == LmKind::Mu) {
        rule = LmRule::BetaS;
        return open_stream(f.body(), t.stream());
      }
      if (auto r = step_rec(f, style, rule, rpos)) {
        rpos.push_back(0);
        return LmTerm::sapp_raw(*r, t.stream());
      }
      return std::nullopt;
    }
    case LmKind::Lam: {
      if (auto g = try_eta_t(t)) {
        rule = LmRule::EtaT;
        return g;
      }
      if (auto r = step_rec(t.body(), style, rule, rpos)) {
        rpos.push_back(0);
        return LmTerm::lam_raw(*r);
      }
      return std::nullopt;
    }
    case LmKind::Mu: {
      if (auto g = try_eta_s(t)) {
        rule = LmRule::EtaS;
        return g;
      }
      if (auto r = step_rec(t.body(), style, rule, rpos)) {
        rpos.push_back(0);
        return LmTerm::mu_raw(*r);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<LmStep> step(const LmTerm& t, const RewriteOptions& opts = {}) {
  LmRule rule{};
  std::vector<int> rpos;
  auto r = detail::step_rec(t, opts.mu_style, rule, rpos);
  if (!r) return std::nullopt;
  std::vector<int> pos(rpos.rbegin(), rpos.rend());
  return LmStep{rule, std::move(pos), *r};
}

inline bool is_normal_form(const LmTerm& t, const RewriteOptions& opts = {}) {
  return !step(t, opts).has_value();
}

struct LmNormResult {
  LmTerm term;
  bool exhausted = false;
  std::int64_t steps = 0;
  std::vector<LmStep> trace;
};

// Reduce until normal form or budget exhaustion. A step whose result would
// exceed the size budget is not taken, so the returned term and every trace
// entry respect max_term_size (unless the input itself was over it).
inline LmNormResult normalize(LmTerm t, const Budget& budget,
                              const RewriteOptions& opts = {},
                              bool want_trace = false) {
  LmNormResult r;
  if (t.size() > budget.max_term_size) {
    r.term = std::move(t);
    r.exhausted = true;
    return r;
  }
  for (;;) {
    auto s = step(t, opts);
    if (!s) break;
    if (r.steps >= budget.max_steps || s->result.size() > budget.max_term_size) {
      r.exhausted = true;
      break;
    }
    t = s->result;
    r.steps++;
    if (want_trace) r.trace.push_back(std::move(*s));
  }
  r.term = std::move(t);
  return r;
}

inline std::optional<LmTerm> reduce_to_nf(const LmTerm& t, const Budget& budget,
                                          const RewriteOptions& opts = {}) {
  LmNormResult r = normalize(t, budget, opts);
  if (r.exhausted) return std::nullopt;
  return r.term;
}

namespace detail {

// Inverse of fst at a lambda-over-mu node: succeeds when the lambda's
// variable occurs exactly as the last argument of every feed of the mu's
// stream, and nowhere else. dt/ds track the binder pair's indices.
inline std::optional<LmTerm> uninsert_rec(const LmTerm& t, int dt, int ds) {
  switch (t.kind()) {
    case LmKind::FreeVar:
      return t;
    case LmKind::BoundVar:
      if (t.index() == dt) return std::nullopt;
      if (t.index() > dt) return LmTerm::bound(t.index() - 1);
      return t;
    case LmKind::Lam: {
      auto b = uninsert_rec(t.body(), dt + 1, ds);
      if (!b) return std::nullopt;
      return LmTerm::lam_raw(*b);
    }
    case LmKind::Mu: {
      auto b = uninsert_rec(t.body(), dt, ds + 1);
      if (!b) return std::nullopt;
      return LmTerm::mu_raw(*b);
    }
    case LmKind::App: {
      auto f = uninsert_rec(t.fun(), dt, ds);
      if (!f) return std::nullopt;
      auto a = uninsert_rec(t.arg(), dt, ds);
      if (!a) return std::nullopt;
      return LmTerm::app(*f, *a);
    }
    case LmKind::SApp: {
      if (t.stream().is_bound() && t.stream().index() == ds) {
        const LmTerm& f = t.fun();
        if (f.kind() != LmKind::App) return std::nullopt;
        if (!(f.arg().kind() == LmKind::BoundVar && f.arg().index() == dt))
          return std::nullopt;
        auto p = uninsert_rec(f.fun(), dt, ds);
        if (!p) return std::nullopt;
        return LmTerm::sapp_raw(*p, t.stream());
      }
      auto f = uninsert_rec(t.fun(), dt, ds);
      if (!f) return std::nullopt;
      return LmTerm::sapp_raw(*f, t.stream());
    }
  }
  return std::nullopt;
}

inline std::optional<LmTerm> try_collapse(const LmTerm& t) {
  if (t.kind() != LmKind::Lam || t.body().kind() != LmKind::Mu)
    return std::nullopt;
  auto b = uninsert_rec(t.body().body(), 0, 0);
  if (!b) return std::nullopt;
  return LmTerm::mu_raw(*b);
}

inline std::optional<LmTerm> collapse_rec(const LmTerm& t) {
  if (auto c = try_collapse(t)) return c;
  switch (t.kind()) {
    case LmKind::FreeVar:
    case LmKind::BoundVar:
      return std::nullopt;
    case LmKind::Lam: {
      auto b = collapse_rec(t.body());
      if (!b) return std::nullopt;
      return LmTerm::lam_raw(*b);
    }
    case LmKind::Mu: {
      auto b = collapse_rec(t.body());
      if (!b) return std::nullopt;
      return LmTerm::mu_raw(*b);
    }
    case LmKind::App: {
      if (auto f = collapse_rec(t.fun())) return LmTerm::app(*f, t.arg());
      if (auto a = collapse_rec(t.arg())) return LmTerm::app(t.fun(), *a);
      return std::nullopt;
    }
    case LmKind::SApp: {
      auto f = collapse_rec(t.fun());
      if (!f) return std::nullopt;
      return LmTerm::sapp_raw(*f, t.stream());
    }
  }
  return std::nullopt;
}

}  // namespace detail

// One leftmost-outermost collapse of \x. #'a. M[P'a := Px'a] to #'a. M,
// anywhere in the term; or nothing if no position collapses.
inline std::optional<LmTerm> fst_collapse_step(const LmTerm& t) {
  return detail::collapse_rec(t);
}

// Normal form followed by collapse/renormalize rounds until neither makes
// progress. Convertible terms that the non-confluent eta_T/mu pair drives
// to different normal forms meet again here.
inline std::optional<LmTerm> canonical_nf(const LmTerm& t, const Budget& budget,
                                          const RewriteOptions& opts = {}) {
  auto nf = reduce_to_nf(t, budget, opts);
  if (!nf) return std::nullopt;
  LmTerm cur = *nf;
  for (std::int64_t round = 0; round <= budget.max_steps; round++) {
    auto c = fst_collapse_step(cur);
    if (!c) return cur;
    auto again = reduce_to_nf(*c, budget, opts);
    if (!again) return std::nullopt;
    cur = *again;
  }
  return std::nullopt;
}

struct EqResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<LmTerm> lhs_nf, rhs_nf;
};

// Budgeted convertibility: Equal / Distinct compare canonical forms;
// Unknown whenever either side ran out of budget.
inline EqResult lm_equal(const LmTerm& m, const LmTerm& n,
                         const Budget& budget = Budget::standard(),
                         const RewriteOptions& opts = {}) {
  EqResult r;
  r.lhs_nf = canonical_nf(m, budget, opts);
  r.rhs_nf = canonical_nf(n, budget, opts);
  if (!r.lhs_nf || !r.rhs_nf) return r;
  r.verdict = (*r.lhs_nf == *r.rhs_nf) ? Verdict::Equal : Verdict::Distinct;
  return r;
}

// Subterm addressing used by traces.
inline std::optional<LmTerm> subterm_at(const LmTerm& t, const std::vector<int>& pos,
                                        std::size_t from = 0) {
  if (from == pos.size()) return t;
  int c = pos[from];
  switch (t.kind()) {
    case LmKind::App:
      if (c == 0) return subterm_at(t.fun(), pos, from + 1);
      if (c == 1) return subterm_at(t.arg(), pos, from + 1);
      return std::nullopt;
    case LmKind::SApp:
      if (c == 0) return subterm_at(t.fun(), pos, from + 1);
      return std::nullopt;
    case LmKind::Lam:
    case LmKind::Mu:
      if (c == 0) return subterm_at(t.body(), pos, from + 1);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

inline std::optional<LmTerm> replace_at(const LmTerm& t, const std::vector<int>& pos,
                                        const LmTerm& sub, std::size_t from = 0) {
  if (from == pos.size()) return sub;
  int c = pos[from];
  switch (t.kind()) {
    case LmKind::App: {
      if (c == 0) {
        auto f = replace_at(t.fun(), pos, sub, from + 1);
        if (!f) return std::nullopt;
        return LmTerm::app(*f, t.arg());
      }
      if (c == 1) {
        auto a = replace_at(t.arg(), pos, sub, from + 1);
        if (!a) return std::nullopt;
        return LmTerm::app(t.fun(), *a);
      }
      return std::nullopt;
    }
    case LmKind::SApp: {
      if (c != 0) return std::nullopt;
      auto f = replace_at(t.fun(), pos, sub, from + 1);
      if (!f) return std::nullopt;
      return LmTerm::sapp_raw(*f, t.stream());
    }
    case LmKind::Lam: {
      if (c != 0) return std::nullopt;
      auto b = replace_at(t.body(), pos, sub, from + 1);
      if (!b) return std::nullopt;
      return LmTerm::lam_raw(*b);
    }
    case LmKind::Mu: {
      if (c != 0) return std::nullopt;
      auto b = replace_at(t.body(), pos, sub, from + 1);
      if (!b) return std::nullopt;
      return LmTerm::mu_raw(*b);
    }
    default:
      return std::nullopt;
  }
}

// Apply one named rule at the root of t, independent of strategy.
inline std::optional<LmTerm> apply_rule_local(const LmTerm& t, LmRule rule) {
  switch (rule) {
    case LmRule::BetaT:
      if (t.kind() == LmKind::App && t.fun().kind() == LmKind::Lam)
        return detail::open_term(t.fun().body(), t.arg());
      return std::nullopt;
    case LmRule::BetaS:
      if (t.kind() == LmKind::SApp && t.fun().kind() == LmKind::Mu)
        return detail::open_stream(t.fun().body(), t.stream());
      return std::nullopt;
    case LmRule::EtaT:
      if (t.kind() == LmKind::Lam) return detail::try_eta_t(t);
      return std::nullopt;
    case LmRule::EtaS:
      if (t.kind() == LmKind::Mu) return detail::try_eta_s(t);
      return std::nullopt;
    case LmRule::Mu:
      if (t.kind() == LmKind::App && t.fun().kind() == LmKind::Mu)
        return LmTerm::mu_raw(detail::insert_stream_arg(t.fun().body(), t.arg()));
      return std::nullopt;
    case LmRule::Fst:
      if (t.kind() == LmKind::Mu) return detail::fst_expand(t);
      return std::nullopt;
  }
  return std::nullopt;
}

// Replay a trace from a start term, checking every step is a genuine rule
// application at its recorded position with the recorded result.
inline bool validate_trace(const LmTerm& start, const std::vector<LmStep>& trace) {
  LmTerm cur = start;
  for (const LmStep& s : trace) {
    auto sub = subterm_at(cur, s.position);
    if (!sub) return false;
    auto applied = apply_rule_local(*sub, s.rule);
    if (!applied) return false;
    auto whole = replace_at(cur, s.position, *applied);
    if (!whole) return false;
    if (!(*whole == s.result)) return false;
    cur = s.result;
  }
  return true;
}

namespace detail {

inline void redexes_rec(const LmTerm& t, MuStyle style, std::vector<int>& path,
                        std::vector<std::pair<std::vector<int>, LmRule>>& out) {
  switch (t.kind()) {
    case LmKind::FreeVar:
    case LmKind::BoundVar:
      return;
    case LmKind::App: {
      const LmTerm& f = t.fun();
      if (f.kind() == LmKind::Lam) out.emplace_back(path, LmRule::BetaT);
      if (f.kind() == LmKind::Mu) {
        if (style == MuStyle::Mu) {
          out.emplace_back(path, LmRule::Mu);
        } else {
          path.push_back(0);
          out.emplace_back(path, LmRule::Fst);
          path.pop_back();
        }
      }
      path.push_back(0);
      redexes_rec(f, style, path, out);
      path.back() = 1;
      redexes_rec(t.arg(), style, path, out);
      path.pop_back();
      return;
    }
    case LmKind::SApp: {
      if (t.fun().kind() == LmKind::Mu) out.emplace_back(path, LmRule::BetaS);
      path.push_back(0);
      redexes_rec(t.fun(), style, path, out);
      path.pop_back();
      return;
    }
    case LmKind::Lam: {
      if (try_eta_t(t)) out.emplace_back(path, LmRule::EtaT);
      path.push_back(0);
      redexes_rec(t.body(), style, path, out);
      path.pop_back();
      return;
    }
    case LmKind::Mu: {
      if (try_eta_s(t)) out.emplace_back(path, LmRule::EtaS);
      path.push_back(0);
      redexes_rec(t.body(), style, path, out);
      path.pop_back();
      return;
    }
  }
}

}  // namespace detail

// Every redex position in t, in leftmost-outermost discovery order.
inline std::vector<std::pair<std::vector<int>, LmRule>> all_redexes(
    const LmTerm& t, const RewriteOptions& opts = {}) {
  std::vector<std::pair<std::vector<int>, LmRule>> out;
  std::vector<int> path;
  detail::redexes_rec(t, opts.mu_style, path, out);
  return out;
}

}  // namespace lmu
