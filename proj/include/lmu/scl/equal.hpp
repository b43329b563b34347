#pragma once

// Convertibility of combinator terms. The combinator rules alone are not
// complete for the equational theory (they never look inside a stuck
// application), so two routes are combined: a fast path that accepts when
// both sides reach the same combinator normal form, and otherwise a
// translation to binder syntax, where the full rule set plus canonical
// forms decide. Distinct is only ever issued by the translation route.

#include <optional>

#include "lmu/common.hpp"
#include "lmu/lm/rewrite.hpp"
#include "lmu/scl/rewrite.hpp"
#include "lmu/translate.hpp"

namespace lmu {

struct SclEqResult {
  Verdict verdict = Verdict::Unknown;
  bool via_translation = false;
  std::optional<SclTerm> lhs_nf, rhs_nf;
};

inline SclEqResult scl_equal(const SclTerm& t, const SclTerm& u,
                             const Budget& budget = Budget::standard()) {
  SclEqResult r;
  r.lhs_nf = scl_reduce_to_nf(t, budget);
  r.rhs_nf = scl_reduce_to_nf(u, budget);
  if (r.lhs_nf && r.rhs_nf && *r.lhs_nf == *r.rhs_nf) {
    r.verdict = Verdict::Equal;
    return r;
  }
  r.via_translation = true;
  r.verdict = lm_equal(to_lm(t), to_lm(u), budget).verdict;
  return r;
}

}  // namespace lmu
