#pragma once

// Oriented combinator axioms, leftmost-outermost:
//
//   K0 T U            -> T
//   S0 T U V          -> T V (U V)
//   C10 T * S U       -> (T U) * S
//   K1 T * S          -> T
//   S1 T U * S        -> (T * S) (U * S)
//   C11 T * S1 * S2   -> T * S2 * S1
//   W1 T * S          -> T * S * S
//   cons              T * (U :: S) -> (T U) * S
//
// At a stream application the deterministic stepper tries the cons rule
// before the combinator rules: a combinator facing a cons stream first
// consumes the cons, so a combinator rule only ever fires on a variable
// stream and the two never race. The relation itself keeps both choices;
// all_redexes and scl_joinable work with the full relation, which is what
// the beta laws of bracket abstraction need on the stream side.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lmu/common.hpp"
#include "lmu/scl/print.hpp"
#include "lmu/scl/term.hpp"

namespace lmu {

enum class SclRule { K0, K1, S0, S1, C10, C11, W1, Cons };

inline const char* rule_name(SclRule r) {
  switch (r) {
    case SclRule::K0: return "K0";
    case SclRule::K1: return "K1";
    case SclRule::S0: return "S0";
    case SclRule::S1: return "S1";
    case SclRule::C10: return "C10";
    case SclRule::C11: return "C11";
    case SclRule::W1: return "W1";
    case SclRule::Cons: return "cons";
  }
  return "?";
}

struct SclStep {
  SclRule rule;
  std::vector<int> position;
  SclTerm result;
};

namespace detail {

inline bool is_const(const SclTerm& t, SclConst c) {
  return t.kind() == SclTermKind::Const && t.cst() == c;
}

// The cons rewrite at the root, when the stream side is a cons.
inline std::optional<std::pair<SclRule, SclTerm>> scl_cons_rule_at(const SclTerm& t) {
  if (t.kind() == SclTermKind::SApp && t.stream().kind() == SclStreamKind::Cons) {
    const SclStream& s = t.stream();
    return std::pair{SclRule::Cons,
                     SclTerm::sapp(SclTerm::app(t.fun(), s.head()), s.tail())};
  }
  return std::nullopt;
}

// The combinator rule matching at the root, regardless of stream shape.
// The seven patterns are mutually disjoint.
inline std::optional<std::pair<SclRule, SclTerm>> scl_combinator_rule_at(
    const SclTerm& t) {
  if (t.kind() == SclTermKind::App) {
    const SclTerm& f = t.fun();
    if (f.kind() == SclTermKind::App) {
      if (is_const(f.fun(), SclConst::K0))
        return std::pair{SclRule::K0, f.arg()};
      if (f.fun().kind() == SclTermKind::App &&
          is_const(f.fun().fun(), SclConst::S0)) {
        const SclTerm& x = f.fun().arg();
        const SclTerm& y = f.arg();
        const SclTerm& z = t.arg();
        return std::pair{SclRule::S0,
                         SclTerm::app(SclTerm::app(x, z), SclTerm::app(y, z))};
      }
    }
    if (f.kind() == SclTermKind::SApp && f.fun().kind() == SclTermKind::App &&
        is_const(f.fun().fun(), SclConst::C10)) {
      const SclTerm& x = f.fun().arg();
      return std::pair{SclRule::C10,
                       SclTerm::sapp(SclTerm::app(x, t.arg()), f.stream())};
    }
    return std::nullopt;
  }
  if (t.kind() == SclTermKind::SApp) {
    const SclStream& s = t.stream();
    const SclTerm& f = t.fun();
    if (f.kind() == SclTermKind::App) {
      if (is_const(f.fun(), SclConst::K1))
        return std::pair{SclRule::K1, f.arg()};
      if (is_const(f.fun(), SclConst::W1))
        return std::pair{SclRule::W1,
                         SclTerm::sapp(SclTerm::sapp(f.arg(), s), s)};
      if (f.fun().kind() == SclTermKind::App &&
          is_const(f.fun().fun(), SclConst::S1)) {
        const SclTerm& x = f.fun().arg();
        const SclTerm& y = f.arg();
        return std::pair{SclRule::S1,
                         SclTerm::app(SclTerm::sapp(x, s), SclTerm::sapp(y, s))};
      }
    }
    if (f.kind() == SclTermKind::SApp && f.fun().kind() == SclTermKind::App &&
        is_const(f.fun().fun(), SclConst::C11)) {
      const SclTerm& x = f.fun().arg();
      return std::pair{SclRule::C11,
                       SclTerm::sapp(SclTerm::sapp(x, s), f.stream())};
    }
    return std::nullopt;
  }
  return std::nullopt;
}

// The deterministic stepper's rule at the root: cons shadows the
// combinator rules.
inline std::optional<std::pair<SclRule, SclTerm>> scl_rule_at(const SclTerm& t) {
  if (auto c = scl_cons_rule_at(t)) return c;
  return scl_combinator_rule_at(t);
}

// Every rule applicable at the root, both of them where cons and a
// combinator overlap.
inline std::vector<std::pair<SclRule, SclTerm>> scl_rules_at(const SclTerm& t) {
  std::vector<std::pair<SclRule, SclTerm>> out;
  if (auto c = scl_cons_rule_at(t)) out.push_back(std::move(*c));
  if (auto k = scl_combinator_rule_at(t)) out.push_back(std::move(*k));
  return out;
}

// No descent into streams: a stream application over a cons is itself a
// cons redex, so a term containing any cons cell always has a redex above
// it, and normal forms only carry variable streams.
inline std::optional<SclTerm> scl_step_term(const SclTerm& t, SclRule& rule,
                                            std::vector<int>& rpos) {
  if (auto r = scl_rule_at(t)) {
    rule = r->first;
    return r->second;
  }
  switch (t.kind()) {
    case SclTermKind::Var:
    case SclTermKind::Const:
      return std::nullopt;
    case SclTermKind::App: {
      if (auto f = scl_step_term(t.fun(), rule, rpos)) {
        rpos.push_back(0);
        return SclTerm::app(*f, t.arg());
      }
      if (auto a = scl_step_term(t.arg(), rule, rpos)) {
        rpos.push_back(1);
        return SclTerm::app(t.fun(), *a);
      }
      return std::nullopt;
    }
    case SclTermKind::SApp: {
      if (auto f = scl_step_term(t.fun(), rule, rpos)) {
        rpos.push_back(0);
        return SclTerm::sapp(*f, t.stream());
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<SclStep> scl_step(const SclTerm& t) {
  SclRule rule{};
  std::vector<int> rpos;
  auto r = detail::scl_step_term(t, rule, rpos);
  if (!r) return std::nullopt;
  std::vector<int> pos(rpos.rbegin(), rpos.rend());
  return SclStep{rule, std::move(pos), *r};
}

inline bool is_normal_form(const SclTerm& t) { return !scl_step(t).has_value(); }

struct SclNormResult {
  SclTerm term;
  bool exhausted = false;
  std::int64_t steps = 0;
  std::vector<SclStep> trace;
};

// Reduce to normal form under the budget; max_term_size bounds measure().
inline SclNormResult scl_normalize(SclTerm t, const Budget& budget,
                                   bool want_trace = false) {
  SclNormResult r;
  if (t.measure() > budget.max_term_size) {
    r.term = std::move(t);
    r.exhausted = true;
    return r;
  }
  for (;;) {
    auto s = scl_step(t);
    if (!s) break;
    if (r.steps >= budget.max_steps || s->result.measure() > budget.max_term_size) {
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

inline std::optional<SclTerm> scl_reduce_to_nf(const SclTerm& t, const Budget& budget) {
  SclNormResult r = scl_normalize(t, budget);
  if (r.exhausted) return std::nullopt;
  return r.term;
}

namespace detail {

inline std::optional<SclTerm> scl_term_at(const SclTerm& t, const std::vector<int>& pos,
                                          std::size_t from);

inline std::optional<SclTerm> scl_term_in_stream_at(const SclStream& s,
                                                    const std::vector<int>& pos,
                                                    std::size_t from) {
  if (from == pos.size() || s.kind() != SclStreamKind::Cons) return std::nullopt;
  if (pos[from] == 0) return scl_term_at(s.head(), pos, from + 1);
  if (pos[from] == 1) return scl_term_in_stream_at(s.tail(), pos, from + 1);
  return std::nullopt;
}

inline std::optional<SclTerm> scl_term_at(const SclTerm& t, const std::vector<int>& pos,
                                          std::size_t from) {
  if (from == pos.size()) return t;
  int c = pos[from];
  switch (t.kind()) {
    case SclTermKind::App:
      if (c == 0) return scl_term_at(t.fun(), pos, from + 1);
      if (c == 1) return scl_term_at(t.arg(), pos, from + 1);
      return std::nullopt;
    case SclTermKind::SApp:
      if (c == 0) return scl_term_at(t.fun(), pos, from + 1);
      if (c == 1) return scl_term_in_stream_at(t.stream(), pos, from + 1);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

inline std::optional<SclTerm> scl_replace_term(const SclTerm& t,
                                               const std::vector<int>& pos,
                                               const SclTerm& sub, std::size_t from);

inline std::optional<SclStream> scl_replace_in_stream(const SclStream& s,
                                                      const std::vector<int>& pos,
                                                      const SclTerm& sub,
                                                      std::size_t from) {
  if (from == pos.size() || s.kind() != SclStreamKind::Cons) return std::nullopt;
  if (pos[from] == 0) {
    auto h = scl_replace_term(s.head(), pos, sub, from + 1);
    if (!h) return std::nullopt;
    return SclStream::cons(*h, s.tail());
  }
  if (pos[from] == 1) {
    auto t2 = scl_replace_in_stream(s.tail(), pos, sub, from + 1);
    if (!t2) return std::nullopt;
    return SclStream::cons(s.head(), *t2);
  }
  return std::nullopt;
}

inline std::optional<SclTerm> scl_replace_term(const SclTerm& t,
                                               const std::vector<int>& pos,
                                               const SclTerm& sub, std::size_t from) {
  if (from == pos.size()) return sub;
  int c = pos[from];
  switch (t.kind()) {
    case SclTermKind::App: {
      if (c == 0) {
        auto f = scl_replace_term(t.fun(), pos, sub, from + 1);
        if (!f) return std::nullopt;
        return SclTerm::app(*f, t.arg());
      }
      if (c == 1) {
        auto a = scl_replace_term(t.arg(), pos, sub, from + 1);
        if (!a) return std::nullopt;
        return SclTerm::app(t.fun(), *a);
      }
      return std::nullopt;
    }
    case SclTermKind::SApp: {
      if (c == 0) {
        auto f = scl_replace_term(t.fun(), pos, sub, from + 1);
        if (!f) return std::nullopt;
        return SclTerm::sapp(*f, t.stream());
      }
      if (c == 1) {
        auto s = scl_replace_in_stream(t.stream(), pos, sub, from + 1);
        if (!s) return std::nullopt;
        return SclTerm::sapp(t.fun(), *s);
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace detail

inline std::optional<SclTerm> subterm_at(const SclTerm& t, const std::vector<int>& pos) {
  return detail::scl_term_at(t, pos, 0);
}

inline std::optional<SclTerm> replace_at(const SclTerm& t, const std::vector<int>& pos,
                                         const SclTerm& sub) {
  return detail::scl_replace_term(t, pos, sub, 0);
}

// Apply one named rule at the root (the cons-first priority still holds:
// asking for a combinator rule under a cons stream fails).
inline std::optional<SclTerm> apply_rule_local(const SclTerm& t, SclRule rule) {
  auto r = detail::scl_rule_at(t);
  if (!r || r->first != rule) return std::nullopt;
  return r->second;
}

inline bool validate_trace(const SclTerm& start, const std::vector<SclStep>& trace) {
  SclTerm cur = start;
  for (const SclStep& s : trace) {
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

inline void scl_redexes_stream(const SclTerm& root, const SclStream& s,
                               std::vector<int>& pos, std::vector<SclStep>& out);

inline void scl_redexes_rec(const SclTerm& root, const SclTerm& t,
                            std::vector<int>& pos, std::vector<SclStep>& out) {
  for (auto& [rule, local] : scl_rules_at(t))
    out.push_back(SclStep{rule, pos, *replace_at(root, pos, local)});
  switch (t.kind()) {
    case SclTermKind::Var:
    case SclTermKind::Const:
      break;
    case SclTermKind::App:
      pos.push_back(0);
      scl_redexes_rec(root, t.fun(), pos, out);
      pos.back() = 1;
      scl_redexes_rec(root, t.arg(), pos, out);
      pos.pop_back();
      break;
    case SclTermKind::SApp:
      pos.push_back(0);
      scl_redexes_rec(root, t.fun(), pos, out);
      pos.back() = 1;
      scl_redexes_stream(root, t.stream(), pos, out);
      pos.pop_back();
      break;
  }
}

inline void scl_redexes_stream(const SclTerm& root, const SclStream& s,
                               std::vector<int>& pos, std::vector<SclStep>& out) {
  if (s.kind() != SclStreamKind::Cons) return;
  pos.push_back(0);
  scl_redexes_rec(root, s.head(), pos, out);
  pos.back() = 1;
  scl_redexes_stream(root, s.tail(), pos, out);
  pos.pop_back();
}

}  // namespace detail

// Every redex of the full relation: both rules at an overlapping root, and
// redexes inside cons heads, which the deterministic stepper never enters.
inline std::vector<SclStep> all_redexes(const SclTerm& t) {
  std::vector<SclStep> out;
  std::vector<int> pos;
  detail::scl_redexes_rec(t, t, pos, out);
  return out;
}

struct SclJoinResult {
  Verdict verdict = Verdict::Unknown;
  std::int64_t steps = 0;
};

// Joinability in the full relation: grow the reachable sets of both sides,
// smallest term first, until they meet. Equal means a common reduct was
// found; Distinct that both reachable sets were exhausted without meeting;
// running out of steps, or pruning an oversize successor, leaves Unknown.
// Each successor generated costs one step.
inline SclJoinResult scl_joinable(const SclTerm& lhs, const SclTerm& rhs,
                                  const Budget& budget) {
  SclJoinResult res;
  if (lhs.measure() > budget.max_term_size || rhs.measure() > budget.max_term_size)
    return res;
  struct Side {
    std::set<std::string> seen;
    std::multimap<std::int64_t, SclTerm> frontier;
    bool pruned = false;
  } side[2];
  const std::string kl = to_text(lhs), kr = to_text(rhs);
  if (kl == kr) {
    res.verdict = Verdict::Equal;
    return res;
  }
  side[0].seen.insert(kl);
  side[0].frontier.emplace(lhs.measure(), lhs);
  side[1].seen.insert(kr);
  side[1].frontier.emplace(rhs.measure(), rhs);
  int turn = 0;
  while (!side[0].frontier.empty() || !side[1].frontier.empty()) {
    if (res.steps >= budget.max_steps) {
      if (!side[0].frontier.empty()) side[0].pruned = true;
      if (!side[1].frontier.empty()) side[1].pruned = true;
      break;
    }
    if (side[turn].frontier.empty()) turn = 1 - turn;
    Side& cur = side[turn];
    Side& other = side[1 - turn];
    SclTerm t = cur.frontier.begin()->second;
    cur.frontier.erase(cur.frontier.begin());
    for (const SclStep& s : all_redexes(t)) {
      if (res.steps >= budget.max_steps) {
        cur.pruned = true;
        break;
      }
      res.steps++;
      if (s.result.measure() > budget.max_term_size) {
        cur.pruned = true;
        continue;
      }
      std::string k = to_text(s.result);
      if (other.seen.count(k)) {
        res.verdict = Verdict::Equal;
        return res;
      }
      if (cur.seen.insert(std::move(k)).second)
        cur.frontier.emplace(s.result.measure(), s.result);
    }
    turn = 1 - turn;
  }
  if (!side[0].pruned && !side[1].pruned) res.verdict = Verdict::Distinct;
  return res;
}

}  // namespace lmu
