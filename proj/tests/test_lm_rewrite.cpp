#include <catch2/catch_amalgamated.hpp>

#include "lmu/lm/parse.hpp"
#include "lmu/lm/print.hpp"
#include "lmu/lm/rewrite.hpp"
#include "lmu/lm/term.hpp"

using namespace lmu;

namespace {

LmTerm nf_of(const std::string& s, MuStyle style = MuStyle::Mu) {
  RewriteOptions o;
  o.mu_style = style;
  auto r = reduce_to_nf(parse_lm(s), Budget::standard(), o);
  REQUIRE(r.has_value());
  return *r;
}

}  // namespace

TEST_CASE("single steps with rules and positions") {
  auto s = step(parse_lm("(\\x. x x) y"));
  REQUIRE(s);
  REQUIRE(s->rule == LmRule::BetaT);
  REQUIRE(s->position.empty());
  REQUIRE(s->result == parse_lm("y y"));

  s = step(parse_lm("f ((\\x. x) y)"));
  REQUIRE(s);
  REQUIRE(s->rule == LmRule::BetaT);
  REQUIRE(s->position == std::vector<int>{1});
  REQUIRE(s->result == parse_lm("f y"));

  s = step(parse_lm("(#'a. x 'a) 'b"));
  REQUIRE(s);
  REQUIRE(s->rule == LmRule::BetaS);
  REQUIRE(s->result == parse_lm("x 'b"));

  s = step(parse_lm("\\x. f x"));
  REQUIRE(s);
  REQUIRE(s->rule == LmRule::EtaT);
  REQUIRE(s->result == parse_lm("f"));

  s = step(parse_lm("#'a. f 'a"));
  REQUIRE(s);
  REQUIRE(s->rule == LmRule::EtaS);
  REQUIRE(s->result == parse_lm("f"));

  s = step(parse_lm("(#'a. x 'a) y"));
  REQUIRE(s);
  REQUIRE(s->rule == LmRule::Mu);
  REQUIRE(s->result == parse_lm("#'a. x y 'a"));
}

TEST_CASE("mu feeds every application of its stream") {
  auto s = step(parse_lm("(#'a. x 'a 'a) y"));
  REQUIRE(s);
  REQUIRE(s->rule == LmRule::Mu);
  REQUIRE(s->result == parse_lm("#'a. x y 'a y 'a"));

  // feeds under inner binders are reached too
  s = step(parse_lm("(#'a. (\\z. x z 'a) w 'a) y"));
  REQUIRE(s);
  REQUIRE(s->result == parse_lm("#'a. (\\z. x z y 'a) w y 'a"));
}

TEST_CASE("leftmost-outermost picks the outer redex") {
  LmTerm t = parse_lm("(\\x. x) ((\\y. y) z)");
  auto s = step(t);
  REQUIRE(s);
  REQUIRE(s->position.empty());
  REQUIRE(s->result == parse_lm("(\\y. y) z"));

  REQUIRE(all_redexes(t).size() == 2);
}

TEST_CASE("terms without redexes are normal forms") {
  for (const char* s : {"x", "\\x. x x", "#'a. (f 'a) 'a", "f (\\x. g)",
                        "\\x. #'a. f 'a x", "#'a. y"}) {
    INFO(s);
    REQUIRE(is_normal_form(parse_lm(s)));
  }
}

TEST_CASE("eta under binders") {
  REQUIRE(nf_of("\\y. \\x. y x") == parse_lm("\\y. y"));
  REQUIRE(nf_of("#'b. #'a. x 'b 'a") == LmTerm::var("x"));
}

TEST_CASE("fst style expands an applied mu then beta-reduces") {
  RewriteOptions fst;
  fst.mu_style = MuStyle::Fst;

  LmTerm t = parse_lm("(#'a. x 'a) z");
  auto s = step(t, fst);
  REQUIRE(s);
  REQUIRE(s->rule == LmRule::Fst);
  REQUIRE(s->position == std::vector<int>{0});
  REQUIRE(s->result == parse_lm("(\\w. #'a. x w 'a) z"));

  auto s2 = step(s->result, fst);
  REQUIRE(s2);
  REQUIRE(s2->rule == LmRule::BetaT);
  REQUIRE(s2->result == parse_lm("#'a. x z 'a"));

  // both styles reach the same normal form here
  REQUIRE(nf_of("(#'a. x 'a) z", MuStyle::Fst) == nf_of("(#'a. x 'a) z"));
  REQUIRE(nf_of("(#'a. y) z", MuStyle::Fst) == nf_of("(#'a. y) z"));
}

TEST_CASE("the eta_T/mu critical pair has two normal forms, one canonical form") {
  LmTerm t = parse_lm("\\x. (#'a. y) x");
  auto redexes = all_redexes(t);
  REQUIRE(redexes.size() == 2);
  REQUIRE(redexes[0].second == LmRule::EtaT);
  REQUIRE(redexes[1].second == LmRule::Mu);

  LmTerm via_eta = parse_lm("#'a. y");
  LmTerm via_mu = parse_lm("\\x. #'a. y");
  // both are reducts of t and both are normal
  auto inner = subterm_at(t, {0});
  REQUIRE(inner);
  auto stepped = apply_rule_local(*inner, LmRule::Mu);
  REQUIRE(stepped);
  REQUIRE(*replace_at(t, {0}, *stepped) == via_mu);
  REQUIRE(*apply_rule_local(t, LmRule::EtaT) == via_eta);
  REQUIRE(is_normal_form(via_eta));
  REQUIRE(is_normal_form(via_mu));
  REQUIRE(via_eta != via_mu);

  // canonical comparison repairs the split
  REQUIRE(lm_equal(via_eta, via_mu).verdict == Verdict::Equal);
  REQUIRE(lm_equal(t, via_mu).verdict == Verdict::Equal);
  REQUIRE(*canonical_nf(via_mu, Budget::standard()) == via_eta);
}

TEST_CASE("collapse undoes an fst expansion exactly") {
  // \x. #'a. f x 'a (g x) 'a  collapses only if every feed ends in x;
  // here the deeper feed g x is not a feed of the form P x, so it stays.
  LmTerm good = parse_lm("\\x. #'a. f x 'a");
  auto c = fst_collapse_step(good);
  REQUIRE(c);
  REQUIRE(*c == parse_lm("#'a. f 'a"));

  // x used outside a feed position: no collapse
  REQUIRE_FALSE(fst_collapse_step(parse_lm("\\x. #'a. f x x 'a")));
  // one feed missing x: no collapse
  REQUIRE_FALSE(fst_collapse_step(parse_lm("\\x. #'a. f x 'a (g 'a)")));
  // all feeds end in x, including nested ones
  c = fst_collapse_step(parse_lm("\\x. #'a. f (g x 'a) x 'a"));
  REQUIRE(c);
  REQUIRE(*c == parse_lm("#'a. f (g 'a) 'a"));
  // fst_expand then collapse round-trips
  LmTerm mu_term = parse_lm("#'a. f 'a (h (k 'a))");
  LmTerm expanded = detail::fst_expand(mu_term);
  REQUIRE(*fst_collapse_step(expanded) == mu_term);
}

TEST_CASE("normalization respects the step budget") {
  LmTerm omega = parse_lm("(\\x. x x) (\\x. x x)");
  LmNormResult r = normalize(omega, Budget(5, 1000000));
  REQUIRE(r.exhausted);
  REQUIRE(r.steps == 5);
  REQUIRE(r.term == omega);

  REQUIRE_FALSE(reduce_to_nf(omega, Budget::fast()).has_value());
  REQUIRE_FALSE(canonical_nf(omega, Budget::fast()).has_value());
}

TEST_CASE("normalization respects the size budget") {
  LmTerm grow = parse_lm("(\\x. x x x) (\\x. x x x)");
  LmNormResult r = normalize(grow, Budget(1000000, 60));
  REQUIRE(r.exhausted);
  REQUIRE(r.term.size() <= 60);

  // an input already over the size bound is returned untouched
  LmNormResult big = normalize(grow, Budget(10, 3));
  REQUIRE(big.exhausted);
  REQUIRE(big.steps == 0);
  REQUIRE(big.term == grow);
}

TEST_CASE("traces replay") {
  LmTerm t = parse_lm("(\\x. x x) ((\\y. y) z)");
  LmNormResult r = normalize(t, Budget::standard(), {}, true);
  REQUIRE_FALSE(r.exhausted);
  REQUIRE(r.term == parse_lm("z z"));
  REQUIRE((std::int64_t)r.trace.size() == r.steps);
  REQUIRE(r.trace.back().result == r.term);
  REQUIRE(validate_trace(t, r.trace));

  // corrupting any part of a step is caught
  auto bad_rule = r.trace;
  bad_rule[0].rule = LmRule::EtaT;
  REQUIRE_FALSE(validate_trace(t, bad_rule));

  auto bad_pos = r.trace;
  bad_pos[0].position.push_back(0);
  REQUIRE_FALSE(validate_trace(t, bad_pos));

  auto bad_result = r.trace;
  bad_result.back().result = parse_lm("z");
  REQUIRE_FALSE(validate_trace(t, bad_result));

  // fst-style traces replay too
  RewriteOptions fst;
  fst.mu_style = MuStyle::Fst;
  LmTerm u = parse_lm("(#'a. x 'a) z");
  LmNormResult rf = normalize(u, Budget::standard(), fst, true);
  REQUIRE(validate_trace(u, rf.trace));
}

TEST_CASE("equality verdicts") {
  // Church successor of 1 is 2
  REQUIRE(lm_equal(parse_lm("(\\n. \\f. \\x. n f (f x)) (\\f. \\x. f x)"),
                   parse_lm("\\f. \\x. f (f x)"))
              .verdict == Verdict::Equal);
  REQUIRE(lm_equal(parse_lm("\\x. \\y. x"), parse_lm("\\x. \\y. y")).verdict ==
          Verdict::Distinct);
  LmTerm omega = parse_lm("(\\x. x x) (\\x. x x)");
  EqResult r = lm_equal(omega, LmTerm::var("y"), Budget::fast());
  REQUIRE(r.verdict == Verdict::Unknown);
  REQUIRE_FALSE(r.lhs_nf.has_value());
  REQUIRE(r.rhs_nf.has_value());
}

TEST_CASE("joined reducts from every critical pair, canonically") {
  const char* terms[] = {
      "\\x. (#'a. y) x",
      "\\x. (#'a. f 'a) x",
      "(\\x. x) ((\\y. y) z)",
      "(#'a. (\\x. g x) 'a) w",
      "#'b. (#'a. f 'a 'b) 'b",
      "\\y. (\\x. f x) y",
      "(\\x. x x) ((\\y. y) (\\z. z))",
      "(#'a. (\\x. x) y 'a) z",
  };
  for (const char* src : terms) {
    LmTerm t = parse_lm(src);
    auto redexes = all_redexes(t);
    for (std::size_t i = 0; i < redexes.size(); i++) {
      for (std::size_t j = i + 1; j < redexes.size(); j++) {
        auto si = subterm_at(t, redexes[i].first);
        auto sj = subterm_at(t, redexes[j].first);
        REQUIRE(si);
        REQUIRE(sj);
        auto ri = apply_rule_local(*si, redexes[i].second);
        auto rj = apply_rule_local(*sj, redexes[j].second);
        REQUIRE(ri);
        REQUIRE(rj);
        LmTerm ti = *replace_at(t, redexes[i].first, *ri);
        LmTerm tj = *replace_at(t, redexes[j].first, *rj);
        INFO(src << "  [" << rule_name(redexes[i].second) << " vs "
                 << rule_name(redexes[j].second) << "]");
        REQUIRE(lm_equal(ti, tj).verdict == Verdict::Equal);
      }
    }
  }
}

TEST_CASE("subterm navigation") {
  LmTerm t = parse_lm("\\x. x (f 'a)");
  REQUIRE(*subterm_at(t, {}) == t);
  REQUIRE(*subterm_at(t, {0, 1, 0}) == LmTerm::var("f"));
  REQUIRE_FALSE(subterm_at(t, {1}).has_value());
  REQUIRE(*replace_at(t, {0, 1, 0}, LmTerm::var("g")) == parse_lm("\\x. x (g 'a)"));
}
