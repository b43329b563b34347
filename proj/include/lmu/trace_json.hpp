#pragma once

// Structured form of a normalization run, for tooling:
// {"steps": [{"k": 1, "rule": "...", "term": "..."}, ...],
//  "exhausted": bool, "final": "..."}.
// Keys serialize alphabetically, so dumps are byte-stable.

#include "json.hpp"
#include "lmu/lm/print.hpp"
#include "lmu/lm/rewrite.hpp"
#include "lmu/scl/print.hpp"
#include "lmu/scl/rewrite.hpp"

namespace lmu {

inline nlohmann::json trace_json(const LmNormResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  int k = 0;
  for (const LmStep& s : r.trace)
    steps.push_back(
        {{"k", ++k}, {"rule", rule_name(s.rule)}, {"term", to_text(s.result)}});
  return {{"steps", std::move(steps)},
          {"exhausted", r.exhausted},
          {"final", to_text(r.term)}};
}

inline nlohmann::json trace_json(const SclNormResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  int k = 0;
  for (const SclStep& s : r.trace)
    steps.push_back(
        {{"k", ++k}, {"rule", rule_name(s.rule)}, {"term", to_text(s.result)}});
  return {{"steps", std::move(steps)},
          {"exhausted", r.exhausted},
          {"final", to_text(r.term)}};
}

}  // namespace lmu
