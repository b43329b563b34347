#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lmu/algebra.hpp"
#include "lmu/gen.hpp"
#include "lmu/lm/parse.hpp"
#include "lmu/lm/print.hpp"
#include "lmu/scl/parse.hpp"
#include "lmu/scl/print.hpp"

using namespace lmu;

namespace {

const TermVar x{"x"};
const StreamVar a{"a"};

// Every variable either generator can emit, sent to itself.
Valuation<TermModel> pool_valuation() {
  Valuation<TermModel> v;
  for (const char* n : {"x", "y", "z"}) v.rho.emplace(n, SclTerm::var(n));
  for (const char* n : {"a", "b", "c"}) v.theta.emplace(n, SclStream::var(n));
  return v;
}

struct SwappedK : TermModel {
  D k0() const { return TermModel::k1(); }
  D k1() const { return TermModel::k0(); }
};

struct OnePoint {
  using D = int;
  using S = int;
  D app(D, D) const { return 0; }
  D sapp(D, S) const { return 0; }
  S cons(D, S) const { return 0; }
  D k0() const { return 0; }
  D k1() const { return 0; }
  D s0() const { return 0; }
  D s1() const { return 0; }
  D c10() const { return 0; }
  D c11() const { return 0; }
  D w1() const { return 0; }
  Verdict equal(D, D) const { return Verdict::Equal; }
  Verdict stream_equal(S, S) const { return Verdict::Equal; }
  std::optional<std::pair<D, S>> decompose(S) const { return std::pair{0, 0}; }
};

struct OnePointSampler {
  std::uint64_t seed = 1;
  std::mt19937_64 rng{1};
  int d() { return 0; }
  int s() { return 0; }
};

static_assert(StreamCombinatoryAlgebra<TermModel>);
static_assert(DecomposableStreams<TermModel>);
static_assert(StreamCombinatoryAlgebra<OnePoint>);
static_assert(SamplerFor<TermModelSampler, TermModel>);
static_assert(SamplerFor<OnePointSampler, OnePoint>);

}  // namespace

TEST_CASE("interpretation in the term model is the identity on terms") {
  TermModel tm;
  SclTerm k0 = SclTerm::constant(SclConst::K0);
  REQUIRE(interp_term(k0, Valuation<TermModel>{}, tm) == k0);

  Valuation<TermModel> v;
  v.rho.emplace("x", parse_scl("K0 K1"));
  REQUIRE(interp_term(parse_scl("x"), v, tm) == parse_scl("K0 K1"));

  SclTerm t = parse_scl("x * (y :: 'a)");
  SclTerm image = interp_term(t, canonical_valuation(t), tm);
  REQUIRE(image == t);
  REQUIRE(tm.equal(image, parse_scl("x y * 'a")) == Verdict::Equal);
}

TEST_CASE("interpretation requires a covering valuation") {
  TermModel tm;
  Valuation<TermModel> empty;
  REQUIRE_THROWS_WITH(interp_term(parse_scl("x y"), empty, tm),
                      Catch::Matchers::ContainsSubstring("term variable x"));
  REQUIRE_THROWS_WITH(interp_term(parse_scl("x * 'a"), canonical_valuation(parse_scl("x")), tm),
                      Catch::Matchers::ContainsSubstring("stream variable 'a"));
  REQUIRE_THROWS_AS(interp_stream(parse_scl_stream("x :: 'a"), empty, tm),
                    PreconditionError);
  REQUIRE_THROWS_AS(interp_lm(parse_lm("f x"), empty, tm), PreconditionError);
}

TEST_CASE("the term model satisfies the algebra laws on sampled elements") {
  TermModel tm;
  TermModelSampler g(20260814);
  Report rep = check_axioms(tm, g, 100);
  INFO(rep.to_text());
  REQUIRE(rep.seed == 20260814);
  REQUIRE(rep.laws.size() == 8);
  for (const LawCount& l : rep.laws) {
    REQUIRE(l.fail == 0);
    REQUIRE(l.pass + l.unknown == 100);
    REQUIRE(l.pass >= 95);
  }
}

TEST_CASE("an empty sample set passes vacuously") {
  TermModel tm;
  TermModelSampler g(7);
  Report rep = check_axioms(tm, g, 0);
  REQUIRE(rep.clean());
  for (const LawCount& l : rep.laws) {
    REQUIRE(l.pass == 0);
    REQUIRE(l.fail == 0);
    REQUIRE(l.unknown == 0);
  }
}

TEST_CASE("swapping constants breaks exactly their laws") {
  SwappedK bad;
  TermModelSampler g(11);
  Report rep = check_axioms(bad, g, 20);
  INFO(rep.to_text());
  REQUIRE(rep.laws[0].law == "K0");
  REQUIRE(rep.laws[0].fail > 0);
  REQUIRE(rep.laws[3].law == "K1");
  REQUIRE(rep.laws[3].fail > 0);
  REQUIRE(!rep.clean());
  // untouched laws keep passing
  REQUIRE(rep.laws[1].fail == 0);
  REQUIRE(rep.laws[7].fail == 0);
}

TEST_CASE("the one point algebra satisfies everything trivially") {
  OnePoint one;
  OnePointSampler g;
  REQUIRE(check_axioms(one, g, 10).clean());
  REQUIRE(check_extensional(one, g, 10).clean());
  Report st = check_standard(one, g, 10);
  REQUIRE(st.clean());
  REQUIRE(st.notes.empty());
}

TEST_CASE("no extensionality counterexample shows up in the term model") {
  TermModel tm;
  // two spellings of the identity are equal outright
  REQUIRE(tm.equal(parse_scl("S0 K0 K0"), parse_scl("S0 K0 (K0 K0)")) ==
          Verdict::Equal);
  // K0 and K1 separate under an applied probe
  REQUIRE(tm.equal(parse_scl("K0"), parse_scl("K1")) == Verdict::Distinct);
  REQUIRE(tm.equal(parse_scl("K0 x"), parse_scl("K1 x")) == Verdict::Distinct);

  TermModelSampler g(31);
  Report rep = check_extensional(tm, g, 60);
  INFO(rep.to_text());
  REQUIRE(rep.laws[0].fail == 0);
  REQUIRE(rep.laws[0].pass >= 50);
}

TEST_CASE("the term model is not standard and the report says so") {
  TermModel tm;
  REQUIRE(!tm.decompose(SclStream::var("a")).has_value());
  auto d = tm.decompose(parse_scl_stream("x :: 'a"));
  REQUIRE(d.has_value());
  REQUIRE(d->first == parse_scl("x"));
  REQUIRE(d->second == SclStream::var("a"));

  TermModelSampler g(5);
  Report rep = check_standard(tm, g, 50);
  INFO(rep.to_text());
  REQUIRE(rep.laws[0].law == "cons-injective");
  REQUIRE(rep.laws[0].fail == 0);
  REQUIRE(rep.laws[1].law == "cons-surjective");
  REQUIRE(rep.laws[1].fail > 0);
  REQUIRE(!rep.notes.empty());
}

TEST_CASE("report text is tab separated with the seed up front") {
  TermModel tm;
  TermModelSampler g(99);
  std::string text = check_axioms(tm, g, 3).to_text();
  REQUIRE(text.rfind("seed\t99\n", 0) == 0);
  REQUIRE(text.find("\nK0\t") != std::string::npos);
  REQUIRE(text.find("\ncons\t") != std::string::npos);
}

TEST_CASE("the term model distinguishes the two projections") {
  TermModel tm;
  LmTerm l = parse_lm("\\x y. x"), r = parse_lm("\\x y. y");
  Valuation<TermModel> v;
  REQUIRE(tm.equal(interp_lm(l, v, tm), interp_lm(r, v, tm)) == Verdict::Distinct);
}

TEST_CASE("interpretation respects substitution") {
  TermModel tm;
  Valuation<TermModel> v = pool_valuation();
  std::mt19937_64 rng(12);
  int eq1 = 0, eq2 = 0, eq3 = 0;
  for (int i = 0; i < 100; i++) {
    LmTerm m = gen_lm(rng, 2 + detail::draw(rng, 10));
    LmTerm n = gen_lm(rng, 1 + detail::draw(rng, 5));

    {
      auto v1 = v;
      v1.rho["x"] = interp_lm(n, v, tm);
      Verdict r = tm.equal(interp_lm(subst_term(m, x, n), v, tm), interp_lm(m, v1, tm));
      INFO("subst: " << to_text(m) << "  [x := " << to_text(n) << "]");
      REQUIRE(r != Verdict::Distinct);
      if (r == Verdict::Equal) eq1++;
    }
    {
      auto v2 = v;
      v2.theta["a"] = v.theta.at("b");
      Verdict r = tm.equal(interp_lm(rename_stream(m, a, StreamVar{"b"}), v, tm),
                           interp_lm(m, v2, tm));
      INFO("rename: " << to_text(m));
      REQUIRE(r != Verdict::Distinct);
      if (r == Verdict::Equal) eq2++;
    }
    {
      auto v3 = v;
      v3.theta["a"] = tm.cons(interp_lm(n, v, tm), v.theta.at("a"));
      Verdict r = tm.equal(interp_lm(struct_subst(m, a, n), v, tm), interp_lm(m, v3, tm));
      INFO("struct: " << to_text(m) << "  [P'a := P " << to_text(n) << " 'a]");
      REQUIRE(r != Verdict::Distinct);
      if (r == Verdict::Equal) eq3++;
    }
  }
  REQUIRE(eq1 == 100);
  REQUIRE(eq2 == 100);
  REQUIRE(eq3 == 100);
}

TEST_CASE("abstracting then applying matches updating the valuation") {
  TermModel tm;
  Valuation<TermModel> v = pool_valuation();
  std::mt19937_64 rng(13);
  int eq_lam = 0, eq_mu = 0;
  for (int i = 0; i < 60; i++) {
    SclTerm t = gen_scl(rng, 2 + detail::draw(rng, 8));
    SclTerm u = gen_scl(rng, 1 + detail::draw(rng, 5));
    SclStream s = gen_scl_stream(rng, 1 + detail::draw(rng, 4));

    {
      auto vx = v;
      vx.rho["x"] = interp_term(u, v, tm);
      Verdict r = tm.equal(tm.app(interp_term(lam_star(x, t), v, tm),
                                  interp_term(u, v, tm)),
                           interp_term(t, vx, tm));
      INFO(to_text(t) << "  [x := " << to_text(u) << "]");
      REQUIRE(r != Verdict::Distinct);
      if (r == Verdict::Equal) eq_lam++;
    }
    {
      auto va = v;
      va.theta["a"] = interp_stream(s, v, tm);
      Verdict r = tm.equal(tm.sapp(interp_term(mu_star(a, t), v, tm),
                                   interp_stream(s, v, tm)),
                           interp_term(t, va, tm));
      INFO(to_text(t) << "  ['a := " << to_text(s) << "]");
      REQUIRE(r != Verdict::Distinct);
      if (r == Verdict::Equal) eq_mu++;
    }
  }
  REQUIRE(eq_lam >= 55);
  REQUIRE(eq_mu >= 55);
}

TEST_CASE("rewrite axioms interpret equal in the term model") {
  TermModel tm;
  const std::pair<const char*, const char*> axioms[] = {
      {"(\\x. x y) z", "z y"},
      {"(#'a. f 'a) 'b", "f 'b"},
      {"\\x. f x", "f"},
      {"#'a. f 'a", "f"},
      {"(#'a. g 'a) w", "#'a. g w 'a"},
  };
  for (auto [l, r] : axioms) {
    LmTerm lt = parse_lm(l), rt = parse_lm(r);
    Valuation<TermModel> v = pool_valuation();
    for (const char* n : {"f", "g", "w"}) v.rho.emplace(n, SclTerm::var(n));
    INFO(l << " = " << r);
    REQUIRE(tm.equal(interp_lm(lt, v, tm), interp_lm(rt, v, tm)) == Verdict::Equal);
  }
}
