#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lmu/algebra.hpp"
#include "lmu/common.hpp"
#include "lmu/lm/parse.hpp"
#include "lmu/lm/print.hpp"
#include "lmu/lm/rewrite.hpp"
#include "lmu/scl/equal.hpp"
#include "lmu/scl/parse.hpp"
#include "lmu/scl/print.hpp"
#include "lmu/scl/rewrite.hpp"
#include "lmu/stdlib.hpp"
#include "lmu/trace_json.hpp"
#include "lmu/translate.hpp"

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// An input is either inline source or a file; a .lmu/.scl extension picks
// the calculus when --calculus is not given.
struct Input {
  std::string src;
  std::string calculus;
};

Input read_input(const std::string& term, const std::string& file,
                 const std::string& calculus) {
  Input in;
  in.calculus = calculus;
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw lmu::PreconditionError("cannot open file: " + file);
    std::ostringstream ss;
    ss << f.rdbuf();
    in.src = ss.str();
    if (in.calculus.empty()) {
      if (ends_with(file, ".scl")) in.calculus = "scl";
      else if (ends_with(file, ".lmu")) in.calculus = "lm";
    }
  } else {
    if (term.empty()) throw lmu::PreconditionError("no input term given");
    in.src = term;
  }
  if (in.calculus.empty()) in.calculus = "lm";
  return in;
}

struct BudgetFlags {
  std::string profile;
  std::int64_t max_steps = 0;
  std::int64_t max_size = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--max-steps", max_steps, "step limit (default 10000)");
    sub->add_option("--max-size", max_size, "term size limit (default 100000)");
    sub->add_option("--budget-profile", profile,
                    "fast or thorough preset; explicit limits override it")
        ->check(CLI::IsMember({"fast", "thorough"}));
  }

  lmu::Budget resolve() const {
    lmu::Budget b = profile == "fast"       ? lmu::Budget::fast()
                    : profile == "thorough" ? lmu::Budget::thorough()
                                            : lmu::Budget::standard();
    return lmu::Budget(max_steps > 0 ? max_steps : b.max_steps,
                       max_size > 0 ? max_size : b.max_term_size);
  }
};

lmu::RewriteOptions rule_options(const std::string& rules) {
  lmu::RewriteOptions o;
  o.mu_style = rules == "fst" ? lmu::MuStyle::Fst : lmu::MuStyle::Mu;
  return o;
}

int exit_for(lmu::Verdict v) {
  switch (v) {
    case lmu::Verdict::Equal: return 0;
    case lmu::Verdict::Distinct: return 1;
    case lmu::Verdict::Unknown: return 3;
  }
  return 2;
}

// Shared reduction printing for both calculi: numbered rule lines in text
// mode, one JSON object in structured mode, exit 3 when the budget ran out.
template <typename NormResult>
int print_reduction(const NormResult& r, const std::string& trace_mode) {
  if (trace_mode == "structured") {
    std::cout << lmu::trace_json(r).dump() << "\n";
  } else {
    int k = 0;
    for (const auto& s : r.trace)
      std::cout << ++k << "\t" << rule_name(s.rule) << "\t"
                << lmu::to_text(s.result) << "\n";
    std::cout << lmu::to_text(r.term) << "\n";
  }
  if (r.exhausted) {
    std::cerr << "error: budget exhausted after " << r.steps << " steps\n";
    return 3;
  }
  return 0;
}

const std::vector<std::pair<std::string, std::string>>& demo_pool() {
  static const std::vector<std::pair<std::string, std::string>> pool = {
      {"identity", "\\z. z"},
      {"true", "\\x y. x"},
      {"false", "\\x y. y"},
      {"two", "\\f x. f (f x)"},
      {"flip", "\\u v. v u"},
  };
  return pool;
}

int run_demo_hd(const lmu::Budget& budget) {
  bool ok = true;
  for (int n = 0; n <= 4; n++) {
    lmu::LmTerm t = lmu::builtin("hd").term;
    std::vector<lmu::LmTerm> elems;
    for (int k = 0; k <= n; k++) elems.push_back(lmu::parse_lm(demo_pool()[k].second));
    for (const auto& e : elems) t = lmu::LmTerm::app(t, e);
    t = lmu::LmTerm::sapp(t, lmu::StreamVar{"b"});
    lmu::LmNormResult r = lmu::normalize(t, budget, {}, true);
    int beta_t = 0, mu = 0, beta_s = 0, other = 0;
    for (const auto& s : r.trace) {
      if (s.rule == lmu::LmRule::BetaT) beta_t++;
      else if (s.rule == lmu::LmRule::Mu) mu++;
      else if (s.rule == lmu::LmRule::BetaS) beta_s++;
      else other++;
    }
    bool good = !r.exhausted && r.term == elems[0] && beta_t == 1 && mu == n &&
                beta_s == 1 && other == 0;
    ok = ok && good;
    std::cout << "hd\tn=" << n << "\t" << (good ? "ok" : "mismatch") << "\t"
              << lmu::to_text(r.term) << "\n";
  }
  return ok ? 0 : 1;
}

int run_demo_nth(const lmu::Budget& budget) {
  bool ok = true;
  for (std::size_t len = 1; len <= 5; len++) {
    std::vector<lmu::LmTerm> elems;
    for (std::size_t k = 0; k < len; k++)
      elems.push_back(lmu::parse_lm(demo_pool()[k].second));
    for (std::size_t i = 0; i < len; i++) {
      lmu::LmTerm got = lmu::run_nth_demo(elems, i, budget);
      bool good = got == elems[i];
      ok = ok && good;
      std::cout << "nth\tlen=" << len << "\ti=" << i << "\t"
                << (good ? "ok" : "mismatch") << "\t" << lmu::to_text(got) << "\n";
    }
  }
  return ok ? 0 : 1;
}

int report_and_exit(const lmu::Report& rep) {
  std::cout << rep.to_text();
  for (const auto& law : rep.laws)
    if (law.fail > 0) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-mu and stream combinator workbench"};
  app.require_subcommand(1);

  std::string term_a, term_b, file_a, file_b, calculus, rules = "mu";
  std::string trace_mode = "text", suite = "axioms", demo_name;
  bool to_scl_flag = false, to_lm_flag = false;
  std::uint64_t seed = 1;
  int samples = 100;
  BudgetFlags budget_flags;

  auto add_term_input = [&](CLI::App* sub) {
    sub->add_option("term", term_a, "term in surface syntax");
    sub->add_option("--file", file_a, "read the term from a file (.lmu or .scl)");
    sub->add_option("--calculus", calculus, "lm or scl (default lm)")
        ->check(CLI::IsMember({"lm", "scl"}));
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse a term and report ok");
  add_term_input(parse_cmd);

  CLI::App* fmt_cmd = app.add_subcommand("fmt", "parse and pretty-print a term");
  add_term_input(fmt_cmd);

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "normalize a term, printing the trace");
  add_term_input(reduce_cmd);
  reduce_cmd->add_option("--rules", rules, "mu or fst (lambda-mu only)")
      ->check(CLI::IsMember({"mu", "fst"}));
  reduce_cmd->add_option("--trace", trace_mode, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  budget_flags.attach(reduce_cmd);

  CLI::App* eq_cmd = app.add_subcommand("eq", "decide convertibility of two terms");
  eq_cmd->add_option("lhs", term_a, "left term");
  eq_cmd->add_option("rhs", term_b, "right term");
  eq_cmd->add_option("--file", file_a, "read the left term from a file");
  eq_cmd->add_option("--file-b", file_b, "read the right term from a file");
  eq_cmd->add_option("--calculus", calculus, "lm or scl (default lm)")
      ->check(CLI::IsMember({"lm", "scl"}));
  eq_cmd->add_option("--rules", rules, "mu or fst (lambda-mu only)")
      ->check(CLI::IsMember({"mu", "fst"}));
  budget_flags.attach(eq_cmd);

  CLI::App* translate_cmd =
      app.add_subcommand("translate", "translate between the calculi");
  translate_cmd->add_option("term", term_a, "term in surface syntax");
  translate_cmd->add_option("--file", file_a, "read the term from a file");
  translate_cmd->add_flag("--to-scl", to_scl_flag, "lambda-mu to combinators");
  translate_cmd->add_flag("--to-lm", to_lm_flag, "combinators to lambda-mu");

  CLI::App* interp_cmd = app.add_subcommand(
      "interp", "interpret a term in the term model over its free variables");
  add_term_input(interp_cmd);
  budget_flags.attach(interp_cmd);

  CLI::App* check_cmd =
      app.add_subcommand("check", "run property checks on the term model");
  check_cmd->add_option("--suite", suite, "axioms, extensional, standard, or all")
      ->check(CLI::IsMember({"axioms", "extensional", "standard", "all"}));
  check_cmd->add_option("--seed", seed, "sampler seed (default 1)");
  check_cmd->add_option("--samples", samples, "sample count (default 100)");
  budget_flags.attach(check_cmd);

  CLI::App* demo_cmd = app.add_subcommand("demo", "run a named example program");
  demo_cmd->add_option("name", demo_name, "hd or nth")
      ->required()
      ->check(CLI::IsMember({"hd", "nth"}));
  budget_flags.attach(demo_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    lmu::Budget budget = budget_flags.resolve();

    if (parse_cmd->parsed() || fmt_cmd->parsed()) {
      Input in = read_input(term_a, file_a, calculus);
      std::string out;
      if (in.calculus == "scl") out = lmu::to_text(lmu::parse_scl(in.src));
      else out = lmu::to_text(lmu::parse_lm(in.src));
      std::cout << (parse_cmd->parsed() ? "ok" : out) << "\n";
      return 0;
    }

    if (reduce_cmd->parsed()) {
      Input in = read_input(term_a, file_a, calculus);
      if (in.calculus == "scl")
        return print_reduction(
            lmu::scl_normalize(lmu::parse_scl(in.src), budget, true), trace_mode);
      return print_reduction(
          lmu::normalize(lmu::parse_lm(in.src), budget, rule_options(rules), true),
          trace_mode);
    }

    if (eq_cmd->parsed()) {
      Input lhs = read_input(term_a, file_a, calculus);
      Input rhs = read_input(term_b, file_b, calculus.empty() ? lhs.calculus : calculus);
      if (lhs.calculus != rhs.calculus)
        throw lmu::PreconditionError("eq operands must be in the same calculus");
      lmu::Verdict v;
      if (lhs.calculus == "scl")
        v = lmu::scl_equal(lmu::parse_scl(lhs.src), lmu::parse_scl(rhs.src), budget)
                .verdict;
      else
        v = lmu::lm_equal(lmu::parse_lm(lhs.src), lmu::parse_lm(rhs.src), budget,
                          rule_options(rules))
                .verdict;
      std::cout << to_string(v) << "\n";
      return exit_for(v);
    }

    if (translate_cmd->parsed()) {
      if (to_scl_flag == to_lm_flag)
        throw lmu::PreconditionError("translate needs exactly one of --to-scl, --to-lm");
      Input in = read_input(term_a, file_a, to_scl_flag ? "lm" : "scl");
      if (to_scl_flag)
        std::cout << lmu::to_text(lmu::to_scl(lmu::parse_lm(in.src))) << "\n";
      else
        std::cout << lmu::to_text(lmu::to_lm(lmu::parse_scl(in.src))) << "\n";
      return 0;
    }

    if (interp_cmd->parsed()) {
      Input in = read_input(term_a, file_a, calculus);
      lmu::TermModel model;
      model.budget = budget;
      if (in.calculus == "scl") {
        lmu::SclTerm t = lmu::parse_scl(in.src);
        std::cout << lmu::to_text(
                         lmu::interp_term(t, lmu::canonical_valuation(t), model))
                  << "\n";
      } else {
        lmu::LmTerm m = lmu::parse_lm(in.src);
        std::cout << lmu::to_text(
                         lmu::interp_lm(m, lmu::canonical_valuation(m), model))
                  << "\n";
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      lmu::TermModel model;
      model.budget = budget;
      int rc = 0;
      if (suite == "axioms" || suite == "all") {
        lmu::TermModelSampler g(seed);
        rc |= report_and_exit(lmu::check_axioms(model, g, samples));
      }
      if (suite == "extensional" || suite == "all") {
        lmu::TermModelSampler g(seed);
        rc |= report_and_exit(lmu::check_extensional(model, g, samples));
      }
      if (suite == "standard" || suite == "all") {
        lmu::TermModelSampler g(seed);
        rc |= report_and_exit(lmu::check_standard(model, g, samples));
      }
      return rc;
    }

    if (demo_cmd->parsed()) {
      if (demo_name == "hd") return run_demo_hd(budget);
      return run_demo_nth(budget);
    }
  } catch (const lmu::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lmu::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
