#pragma once

// Executable example programs: stream head and nth-element lookup, plus the
// lambda-calculus support they need (Church numerals, booleans, pairs,
// predecessor, Curry's fixed point operator). hd absorbs the stream prefix
// with mu steps; nth recurses on a numeral index, re-feeding the captured
// stream through a stream application inside the mu body.

#include <cstddef>
#include <string>
#include <vector>

#include "lmu/common.hpp"
#include "lmu/lm/parse.hpp"
#include "lmu/lm/print.hpp"
#include "lmu/lm/rewrite.hpp"
#include "lmu/lm/term.hpp"

namespace lmu {

struct NamedTerm {
  std::string name;
  LmTerm term;
  std::string doc;
};

// church(n) = \f x. f (f ... (f x))
inline LmTerm church(int n) {
  if (n < 0) throw PreconditionError("church numeral index must be nonnegative");
  LmTerm body = LmTerm::var("x");
  for (int i = 0; i < n; i++) body = LmTerm::app(LmTerm::var("f"), body);
  return LmTerm::lam(TermVar{"f"}, LmTerm::lam(TermVar{"x"}, body));
}

namespace detail {

inline LmTerm pred_term() {
  // \n. fst (n shift (pair c0 c0)) with shift p = pair (snd p) (succ (snd p)),
  // so n shifts of (0, 0) end at (n - 1, n).
  LmTerm pair = parse_lm("\\x y f. f x y");
  LmTerm fst_p = parse_lm("\\p. p (\\x y. x)");
  LmTerm snd_p = parse_lm("\\p. p (\\x y. y)");
  LmTerm succ = parse_lm("\\m f x. f (m f x)");
  LmTerm p = LmTerm::var("p");
  LmTerm snd_of_p = LmTerm::app(snd_p, p);
  LmTerm shift = LmTerm::lam(
      TermVar{"p"},
      LmTerm::app(LmTerm::app(pair, snd_of_p), LmTerm::app(succ, snd_of_p)));
  LmTerm start = LmTerm::app(LmTerm::app(pair, church(0)), church(0));
  LmTerm n = LmTerm::var("n");
  return LmTerm::lam(
      TermVar{"n"},
      LmTerm::app(fst_p, LmTerm::app(LmTerm::app(n, shift), start)));
}

inline LmTerm nth_term() {
  // Y (\f x. #'a. \y. if (zero? y) x (f 'a (pred y))): the mu captures the
  // stream, the recursive call feeds it back in with the decremented index.
  LmTerm if_t = parse_lm("\\b t e. b t e");
  LmTerm zero_p = parse_lm("\\n. n (\\z x y. y) (\\x y. x)");
  LmTerm y_var = LmTerm::var("y");
  LmTerm call = LmTerm::app(LmTerm::sapp(LmTerm::var("f"), StreamVar{"a"}),
                            LmTerm::app(pred_term(), y_var));
  LmTerm body = LmTerm::app(
      LmTerm::app(LmTerm::app(if_t, LmTerm::app(zero_p, y_var)),
                  LmTerm::var("x")),
      call);
  LmTerm functional = LmTerm::lam(
      TermVar{"f"},
      LmTerm::lam(TermVar{"x"},
                  LmTerm::mu(StreamVar{"a"}, LmTerm::lam(TermVar{"y"}, body))));
  return LmTerm::app(parse_lm("\\f. (\\x. f (x x)) (\\x. f (x x))"), functional);
}

}  // namespace detail

// Table of the example programs and their building blocks. church(n) is
// also reachable here by name, e.g. builtin("church(2)").
inline NamedTerm builtin(const std::string& name) {
  if (name == "hd")
    return {name, parse_lm("\\x. #'a. x"), "head of a stream: hd N0 ... Nn 'b reduces to N0"};
  if (name == "nth")
    return {name, detail::nth_term(),
            "nth element of a stream: nth N0 ... Nn 'b c_i reduces to N_i"};
  if (name == "Y")
    return {name, parse_lm("\\f. (\\x. f (x x)) (\\x. f (x x))"),
            "Curry fixed point operator, Y f = f (Y f)"};
  if (name == "true") return {name, parse_lm("\\x y. x"), "boolean true"};
  if (name == "false") return {name, parse_lm("\\x y. y"), "boolean false"};
  if (name == "if")
    return {name, parse_lm("\\b t e. b t e"), "conditional on booleans"};
  if (name == "zero?")
    return {name, parse_lm("\\n. n (\\z x y. y) (\\x y. x)"),
            "test for the zero numeral"};
  if (name == "pred")
    return {name, detail::pred_term(), "numeral predecessor, pred c0 = c0"};
  if (name == "pair") return {name, parse_lm("\\x y f. f x y"), "pair constructor"};
  if (name == "fst")
    return {name, parse_lm("\\p. p (\\x y. x)"), "first pair projection"};
  if (name == "snd")
    return {name, parse_lm("\\p. p (\\x y. y)"), "second pair projection"};
  if (name.size() > 8 && name.compare(0, 7, "church(") == 0 && name.back() == ')') {
    std::string digits = name.substr(7, name.size() - 8);
    if (!digits.empty() &&
        digits.find_first_not_of("0123456789") == std::string::npos)
      return {name, church(std::stoi(digits)), "Church numeral"};
  }
  throw PreconditionError("unknown builtin: " + name);
}

// Builds nth N0 ... Nn 'b c_i and normalizes it. The result alpha-equals
// elements[i] whenever the inputs meet the preconditions.
inline LmTerm run_nth_demo(const std::vector<LmTerm>& elements, std::size_t i,
                           const Budget& budget) {
  if (elements.empty()) throw PreconditionError("nth demo needs at least one element");
  if (i >= elements.size())
    throw PreconditionError("nth demo index " + std::to_string(i) +
                            " out of range for " +
                            std::to_string(elements.size()) + " elements");
  for (const LmTerm& e : elements) {
    auto [tv, sv] = free_vars(e);
    if (!tv.empty() || !sv.empty())
      throw PreconditionError("nth demo elements must be closed: " + to_text(e));
    if (!is_normal_form(e))
      throw PreconditionError("nth demo elements must be normal forms: " + to_text(e));
  }
  LmTerm t = builtin("nth").term;
  for (const LmTerm& e : elements) t = LmTerm::app(t, e);
  t = LmTerm::app(LmTerm::sapp(t, StreamVar{"b"}), church(static_cast<int>(i)));
  LmNormResult r = normalize(std::move(t), budget);
  if (r.exhausted)
    throw BudgetExceededError("nth demo did not normalize within budget");
  return r.term;
}

}  // namespace lmu
