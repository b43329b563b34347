#include <catch2/catch_amalgamated.hpp>

#include "lmu/gen.hpp"
#include "lmu/scl/equal.hpp"
#include "lmu/scl/parse.hpp"
#include "lmu/scl/print.hpp"
#include "lmu/scl/rewrite.hpp"
#include "lmu/scl/term.hpp"

using namespace lmu;

namespace {

SclTerm C(SclConst c) { return SclTerm::constant(c); }

const SclTerm I = SclTerm::app(SclTerm::app(C(SclConst::S0), C(SclConst::K0)),
                               C(SclConst::K0));

SclTerm step_result(const std::string& s, SclRule expect) {
  auto st = scl_step(parse_scl(s));
  REQUIRE(st.has_value());
  REQUIRE(st->rule == expect);
  return st->result;
}

}  // namespace

TEST_CASE("combinator parsing and printing") {
  REQUIRE(parse_scl("K0 x y") ==
          SclTerm::app(SclTerm::app(C(SclConst::K0), SclTerm::var("x")),
                       SclTerm::var("y")));
  // juxtaposition and * chain left-associatively at one level
  REQUIRE(parse_scl("K0 x * 'a y") ==
          SclTerm::app(SclTerm::sapp(SclTerm::app(C(SclConst::K0), SclTerm::var("x")),
                                     SclStream::var("a")),
                       SclTerm::var("y")));
  REQUIRE(parse_scl("x * 'a * 'b") ==
          SclTerm::sapp(SclTerm::sapp(SclTerm::var("x"), SclStream::var("a")),
                        SclStream::var("b")));
  REQUIRE(parse_scl("f * (x :: y :: 'a)") ==
          SclTerm::sapp(SclTerm::var("f"),
                        SclStream::cons(SclTerm::var("x"),
                                        SclStream::cons(SclTerm::var("y"),
                                                        SclStream::var("a")))));
  REQUIRE(parse_scl_stream("K0 x :: 'a") ==
          SclStream::cons(SclTerm::app(C(SclConst::K0), SclTerm::var("x")),
                          SclStream::var("a")));

  REQUIRE(to_text(parse_scl("S0 (K0 x) (S0 K0 K0)")) == "S0 (K0 x) (S0 K0 K0)");
  REQUIRE(to_text(parse_scl("f * (x :: y :: 'a)")) == "f * (x :: y :: 'a)");
  REQUIRE(to_text(parse_scl("f (g * 'a)")) == "f (g * 'a)");
  REQUIRE(to_text(parse_scl("C10 x * 'a y")) == "C10 x * 'a y");

  for (const char* s : {"x", "K0", "W1 x * 'a * 'b", "f (K1 g) * (x :: 'a) h",
                        "f * (K0 * 'a :: 'b)", "S1 x y * (z :: 'c)"}) {
    SclTerm t = parse_scl(s);
    REQUIRE(parse_scl(to_text(t)) == t);
  }

  REQUIRE_THROWS_AS(parse_scl("K2 x"), ParseError);
  REQUIRE_THROWS_AS(parse_scl("x :"), ParseError);
  REQUIRE_THROWS_AS(parse_scl("x * y"), ParseError);
  REQUIRE_THROWS_AS(parse_scl("x * (y)"), ParseError);
  REQUIRE_THROWS_AS(parse_scl("f * ('a :: 'b)"), ParseError);
  REQUIRE_THROWS_AS(parse_scl(""), ParseError);
}

TEST_CASE("measure counts cons cells twice") {
  SclTerm t = parse_scl("f * (x :: 'a)");
  REQUIRE(t.node_count() == 5);
  REQUIRE(t.cons_count() == 1);
  REQUIRE(t.measure() == 6);

  auto s = scl_step(t);
  REQUIRE(s);
  REQUIRE(s->rule == SclRule::Cons);
  // the cons step preserves constructor count and drops the measure
  REQUIRE(s->result.node_count() == t.node_count());
  REQUIRE(s->result.measure() == 5);
}

TEST_CASE("each combinator rule fires with its contractum") {
  REQUIRE(step_result("K0 x y", SclRule::K0) == parse_scl("x"));
  REQUIRE(step_result("S0 x y z", SclRule::S0) == parse_scl("x z (y z)"));
  REQUIRE(step_result("C10 x * 'a y", SclRule::C10) == parse_scl("x y * 'a"));
  REQUIRE(step_result("K1 x * 'a", SclRule::K1) == parse_scl("x"));
  REQUIRE(step_result("S1 x y * 'a", SclRule::S1) ==
          parse_scl("(x * 'a) (y * 'a)"));
  REQUIRE(step_result("C11 x * 'a * 'b", SclRule::C11) == parse_scl("x * 'b * 'a"));
  REQUIRE(step_result("W1 x * 'a", SclRule::W1) == parse_scl("x * 'a * 'a"));
  REQUIRE(step_result("x * (y :: 'a)", SclRule::Cons) == parse_scl("x y * 'a"));
}

TEST_CASE("cons is consumed before the combinator rules") {
  // at a stream application over a cons the cons rule always goes first
  SclTerm t = parse_scl("K1 x * (y :: 'a)");
  auto s = scl_step(t);
  REQUIRE(s);
  REQUIRE(s->rule == SclRule::Cons);
  REQUIRE(s->result == parse_scl("K1 x y * 'a"));

  // the resulting term is stuck: no combinator pattern matches it
  REQUIRE(is_normal_form(s->result));
  REQUIRE(scl_reduce_to_nf(t, Budget::standard()) == parse_scl("K1 x y * 'a"));

  // yet the discarding reading is still provable through translation
  SclEqResult eq = scl_equal(t, parse_scl("x"));
  REQUIRE(eq.verdict == Verdict::Equal);
  REQUIRE(eq.via_translation);
}

TEST_CASE("leftmost-outermost order on combinator terms") {
  SclTerm t = parse_scl("K0 (K0 x y) z");
  auto s = scl_step(t);
  REQUIRE(s);
  REQUIRE(s->position.empty());
  REQUIRE(s->result == parse_scl("K0 x y"));

  s = scl_step(parse_scl("f (K0 x y)"));
  REQUIRE(s);
  REQUIRE(s->position == std::vector<int>{1});
  REQUIRE(s->result == parse_scl("f x"));
}

TEST_CASE("normal forms carry only variable streams") {
  for (const char* s : {"x", "K0 x", "S0 x y", "x * 'a", "K1 x y * 'a",
                        "C11 x * 'a", "W1 * 'a"}) {
    INFO(s);
    REQUIRE(is_normal_form(parse_scl(s)));
  }
  // anything holding a cons still has a redex somewhere above it
  REQUIRE_FALSE(is_normal_form(parse_scl("f (g * (x :: 'a))")));
}

TEST_CASE("combinator normalization respects budgets") {
  SclTerm d = SclTerm::app(SclTerm::app(C(SclConst::S0), I), I);
  SclTerm omega = SclTerm::app(d, d);
  SclNormResult r = scl_normalize(omega, Budget(200, 1000000));
  REQUIRE(r.exhausted);
  REQUIRE(r.steps == 200);
  REQUIRE_FALSE(scl_reduce_to_nf(omega, Budget::fast()).has_value());
}

TEST_CASE("combinator traces replay") {
  SclTerm t = parse_scl("S0 K0 K0 (K1 y * 'a) * (w :: 'b)");
  SclNormResult r = scl_normalize(t, Budget::standard(), true);
  REQUIRE_FALSE(r.exhausted);
  REQUIRE(r.term == parse_scl("y w * 'b"));
  REQUIRE((std::int64_t)r.trace.size() == r.steps);
  REQUIRE(r.steps > 0);
  REQUIRE(validate_trace(t, r.trace));

  auto bad = r.trace;
  bad[0].rule = bad[0].rule == SclRule::K0 ? SclRule::K1 : SclRule::K0;
  REQUIRE_FALSE(validate_trace(t, bad));
}

TEST_CASE("combinator substitution") {
  SclTerm t = parse_scl("K0 x * (x :: 'a)");
  REQUIRE(subst(t, TermVar{"x"}, parse_scl("S0 y")) ==
          parse_scl("K0 (S0 y) * (S0 y :: 'a)"));
  REQUIRE(subst(t, TermVar{"w"}, parse_scl("y")).identical(t));
  REQUIRE(subst(t, StreamVar{"a"}, parse_scl_stream("y :: 'b")) ==
          parse_scl("K0 x * (x :: y :: 'b)"));
  REQUIRE(occurs(t, TermVar{"x"}));
  REQUIRE_FALSE(occurs(t, TermVar{"y"}));
  REQUIRE(occurs(t, StreamVar{"a"}));
}

TEST_CASE("combinator equality verdicts") {
  SclEqResult r = scl_equal(parse_scl("K0 x y"), parse_scl("x"));
  REQUIRE(r.verdict == Verdict::Equal);
  REQUIRE_FALSE(r.via_translation);

  REQUIRE(scl_equal(parse_scl("K0"), parse_scl("K1")).verdict == Verdict::Distinct);
  REQUIRE(scl_equal(parse_scl("S0 K0 K0"), parse_scl("K0")).verdict ==
          Verdict::Distinct);

  SclTerm d = SclTerm::app(SclTerm::app(C(SclConst::S0), I), I);
  SclTerm omega = SclTerm::app(d, d);
  REQUIRE(scl_equal(omega, parse_scl("x"), Budget::fast()).verdict ==
          Verdict::Unknown);
}

TEST_CASE("subterm addressing reaches into streams") {
  SclTerm t = parse_scl("f * (K0 x y :: 'a)");
  auto sub = subterm_at(t, {1, 0});
  REQUIRE(sub);
  REQUIRE(*sub == parse_scl("K0 x y"));
  REQUIRE(*replace_at(t, {1, 0}, parse_scl("z")) == parse_scl("f * (z :: 'a)"));
  REQUIRE_FALSE(subterm_at(t, {1, 1}).has_value());
  REQUIRE(*subterm_at(t, {0}) == parse_scl("f"));
}

TEST_CASE("random combinator terms round-trip through the printer") {
  std::mt19937_64 rng(20260814);
  for (int i = 0; i < 200; i++) {
    SclTerm t = gen_scl(rng, 2 + detail::draw(rng, 20));
    REQUIRE(parse_scl(to_text(t)) == t);
  }
}
