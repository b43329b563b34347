#pragma once

// Stream combinatory algebras: the interface an instance must satisfy, the
// homomorphic meaning functions, the term model (combinator terms modulo
// convertibility), and the sampled law checkers. The checkers are
// refutation-only: a clean report says no counterexample was found in the
// sampled instances, never that a law holds outright.

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lmu/common.hpp"
#include "lmu/gen.hpp"
#include "lmu/scl/equal.hpp"
#include "lmu/scl/print.hpp"
#include "lmu/scl/term.hpp"
#include "lmu/translate.hpp"

namespace lmu {

template <typename A>
concept StreamCombinatoryAlgebra =
    requires(const A& a, const typename A::D& d, const typename A::S& s) {
      { a.app(d, d) } -> std::convertible_to<typename A::D>;
      { a.sapp(d, s) } -> std::convertible_to<typename A::D>;
      { a.cons(d, s) } -> std::convertible_to<typename A::S>;
      { a.k0() } -> std::convertible_to<typename A::D>;
      { a.k1() } -> std::convertible_to<typename A::D>;
      { a.s0() } -> std::convertible_to<typename A::D>;
      { a.s1() } -> std::convertible_to<typename A::D>;
      { a.c10() } -> std::convertible_to<typename A::D>;
      { a.c11() } -> std::convertible_to<typename A::D>;
      { a.w1() } -> std::convertible_to<typename A::D>;
      { a.equal(d, d) } -> std::convertible_to<Verdict>;
      { a.stream_equal(s, s) } -> std::convertible_to<Verdict>;
    };

// An algebra whose streams can be probed for a cons decomposition.
template <typename A>
concept DecomposableStreams =
    StreamCombinatoryAlgebra<A> && requires(const A& a, const typename A::S& s) {
      {
        a.decompose(s)
      } -> std::convertible_to<std::optional<std::pair<typename A::D, typename A::S>>>;
    };

// A source of sampled elements for an algebra's two carriers, carrying its
// seed so reports can echo it and raw randomness for probe shapes.
template <typename G, typename A>
concept SamplerFor = requires(G& g) {
  { g.d() } -> std::convertible_to<typename A::D>;
  { g.s() } -> std::convertible_to<typename A::S>;
  { g.seed } -> std::convertible_to<std::uint64_t>;
  { g.rng() } -> std::convertible_to<std::uint64_t>;
};

template <typename A>
struct Valuation {
  std::map<std::string, typename A::D> rho;
  std::map<std::string, typename A::S> theta;
};

namespace detail {

template <typename A>
typename A::S interp_stream_rec(const SclStream& s, const Valuation<A>& v, const A& a);

template <typename A>
typename A::D interp_term_rec(const SclTerm& t, const Valuation<A>& v, const A& a) {
  switch (t.kind()) {
    case SclTermKind::Var:
      return v.rho.at(t.name());
    case SclTermKind::Const:
      switch (t.cst()) {
        case SclConst::K0: return a.k0();
        case SclConst::K1: return a.k1();
        case SclConst::S0: return a.s0();
        case SclConst::S1: return a.s1();
        case SclConst::C10: return a.c10();
        case SclConst::C11: return a.c11();
        case SclConst::W1: return a.w1();
      }
      throw PreconditionError("invalid constant");
    case SclTermKind::App:
      return a.app(interp_term_rec(t.fun(), v, a), interp_term_rec(t.arg(), v, a));
    case SclTermKind::SApp:
      return a.sapp(interp_term_rec(t.fun(), v, a),
                    interp_stream_rec(t.stream(), v, a));
  }
  throw PreconditionError("invalid term");
}

template <typename A>
typename A::S interp_stream_rec(const SclStream& s, const Valuation<A>& v,
                                const A& a) {
  if (s.kind() == SclStreamKind::Var) return v.theta.at(s.name());
  return a.cons(interp_term_rec(s.head(), v, a), interp_stream_rec(s.tail(), v, a));
}

template <typename A>
void require_covered(const std::set<TermVar>& tv, const std::set<StreamVar>& sv,
                     const Valuation<A>& v) {
  for (const TermVar& x : tv)
    if (!v.rho.count(x.name))
      throw PreconditionError("valuation does not cover term variable " + x.name);
  for (const StreamVar& x : sv)
    if (!v.theta.count(x.name))
      throw PreconditionError("valuation does not cover stream variable '" + x.name);
}

}  // namespace detail

template <StreamCombinatoryAlgebra A>
typename A::D interp_term(const SclTerm& t, const Valuation<A>& v, const A& a) {
  auto [tv, sv] = free_vars(t);
  detail::require_covered(tv, sv, v);
  return detail::interp_term_rec(t, v, a);
}

template <StreamCombinatoryAlgebra A>
typename A::S interp_stream(const SclStream& s, const Valuation<A>& v, const A& a) {
  auto [tv, sv] = free_vars(s);
  detail::require_covered(tv, sv, v);
  return detail::interp_stream_rec(s, v, a);
}

// The meaning of a binder term over an algebra is the meaning of its
// combinator translation.
template <StreamCombinatoryAlgebra A>
typename A::D interp_lm(const LmTerm& m, const Valuation<A>& v, const A& a) {
  return interp_term(to_scl(m), v, a);
}

// Combinator terms modulo convertibility; representatives are the terms
// themselves and equality is the budgeted semi-decision procedure. Streams
// compare spine-wise: nothing in the theory equates a variable stream with
// a cons or reorders a spine.
struct TermModel {
  using D = SclTerm;
  using S = SclStream;

  Budget budget = Budget::standard();

  TermModel() = default;
  explicit TermModel(const Budget& b) : budget(b) {}

  D app(const D& t, const D& u) const { return SclTerm::app(t, u); }
  D sapp(const D& t, const S& s) const { return SclTerm::sapp(t, s); }
  S cons(const D& t, const S& s) const { return SclStream::cons(t, s); }

  D k0() const { return SclTerm::constant(SclConst::K0); }
  D k1() const { return SclTerm::constant(SclConst::K1); }
  D s0() const { return SclTerm::constant(SclConst::S0); }
  D s1() const { return SclTerm::constant(SclConst::S1); }
  D c10() const { return SclTerm::constant(SclConst::C10); }
  D c11() const { return SclTerm::constant(SclConst::C11); }
  D w1() const { return SclTerm::constant(SclConst::W1); }

  Verdict equal(const D& t, const D& u) const {
    return scl_equal(t, u, budget).verdict;
  }

  Verdict stream_equal(const S& l, const S& r) const {
    if (l.kind() == SclStreamKind::Var || r.kind() == SclStreamKind::Var) {
      if (l.kind() != r.kind()) return Verdict::Distinct;
      return l.name() == r.name() ? Verdict::Equal : Verdict::Distinct;
    }
    Verdict h = equal(l.head(), r.head());
    if (h == Verdict::Distinct) return Verdict::Distinct;
    Verdict t = stream_equal(l.tail(), r.tail());
    if (t == Verdict::Distinct) return Verdict::Distinct;
    return (h == Verdict::Equal && t == Verdict::Equal) ? Verdict::Equal
                                                        : Verdict::Unknown;
  }

  std::optional<std::pair<D, S>> decompose(const S& s) const {
    if (s.kind() != SclStreamKind::Cons) return std::nullopt;
    return std::pair{s.head(), s.tail()};
  }
};

// The valuation sending every free variable to itself; under it the term
// model interprets T as the class of T.
inline Valuation<TermModel> canonical_valuation(const SclTerm& t) {
  Valuation<TermModel> v;
  auto [tv, sv] = free_vars(t);
  for (const TermVar& x : tv) v.rho.emplace(x.name, SclTerm::var(x.name));
  for (const StreamVar& x : sv) v.theta.emplace(x.name, SclStream::var(x.name));
  return v;
}

inline Valuation<TermModel> canonical_valuation(const LmTerm& m) {
  Valuation<TermModel> v;
  auto [tv, sv] = free_vars(m);
  for (const TermVar& x : tv) v.rho.emplace(x.name, SclTerm::var(x.name));
  for (const StreamVar& x : sv) v.theta.emplace(x.name, SclStream::var(x.name));
  return v;
}

// Draws term-model elements from the seeded generators.
struct TermModelSampler {
  std::uint64_t seed;
  std::mt19937_64 rng;

  explicit TermModelSampler(std::uint64_t s) : seed(s), rng(s) {}

  SclTerm d() { return gen_scl(rng, 1 + detail::draw(rng, 6)); }
  SclStream s() { return gen_scl_stream(rng, 1 + detail::draw(rng, 4)); }
};

struct LawCount {
  std::string law;
  int pass = 0;
  int fail = 0;
  int unknown = 0;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<LawCount> laws;
  std::vector<std::string> notes;

  bool clean() const {
    for (const LawCount& l : laws)
      if (l.fail > 0) return false;
    return true;
  }

  std::string to_text() const {
    std::string out = "seed\t" + std::to_string(seed) + "\n";
    for (const LawCount& l : laws)
      out += l.law + "\t" + std::to_string(l.pass) + "\t" + std::to_string(l.fail) +
             "\t" + std::to_string(l.unknown) + "\n";
    for (const std::string& n : notes) out += "# " + n + "\n";
    return out;
  }
};

namespace detail {

inline void tally(LawCount& c, Verdict v) {
  if (v == Verdict::Equal)
    c.pass++;
  else if (v == Verdict::Distinct)
    c.fail++;
  else
    c.unknown++;
}

}  // namespace detail

// Evaluates the seven combinator laws plus the cons law on n sampled
// tuples.
template <StreamCombinatoryAlgebra A, SamplerFor<A> G>
Report check_axioms(const A& a, G& g, int n) {
  Report rep;
  rep.seed = g.seed;
  rep.laws = {{"K0"}, {"S0"}, {"C10"}, {"K1"}, {"S1"}, {"C11"}, {"W1"}, {"cons"}};
  for (int i = 0; i < n; i++) {
    auto d1 = g.d(), d2 = g.d(), d3 = g.d();
    auto s1 = g.s(), s2 = g.s(), s3 = g.s();
    detail::tally(rep.laws[0], a.equal(a.app(a.app(a.k0(), d1), d2), d1));
    detail::tally(rep.laws[1],
                  a.equal(a.app(a.app(a.app(a.s0(), d1), d2), d3),
                          a.app(a.app(d1, d3), a.app(d2, d3))));
    detail::tally(rep.laws[2], a.equal(a.app(a.sapp(a.app(a.c10(), d1), s1), d2),
                                       a.sapp(a.app(d1, d2), s1)));
    detail::tally(rep.laws[3], a.equal(a.sapp(a.app(a.k1(), d1), s1), d1));
    detail::tally(rep.laws[4],
                  a.equal(a.sapp(a.app(a.app(a.s1(), d1), d2), s1),
                          a.app(a.sapp(d1, s1), a.sapp(d2, s1))));
    detail::tally(rep.laws[5], a.equal(a.sapp(a.sapp(a.app(a.c11(), d1), s1), s2),
                                       a.sapp(a.sapp(d1, s2), s1)));
    detail::tally(rep.laws[6], a.equal(a.sapp(a.app(a.w1(), d1), s1),
                                       a.sapp(a.sapp(d1, s1), s1)));
    detail::tally(rep.laws[7],
                  a.equal(a.sapp(d1, a.cons(d2, s3)), a.sapp(a.app(d1, d2), s3)));
  }
  return rep;
}

// Refutation-only extensionality probe: looks for a pair with unequal
// identity that no sampled argument sequence distinguishes. Probes mix
// term and stream arguments, since some pairs only separate after both.
template <StreamCombinatoryAlgebra A, SamplerFor<A> G>
Report check_extensional(const A& a, G& g, int n, int probes_per_pair = 12) {
  Report rep;
  rep.seed = g.seed;
  rep.laws = {{"extensionality"}};
  LawCount& c = rep.laws[0];
  for (int i = 0; i < n; i++) {
    auto d1 = g.d(), d2 = g.d();
    Verdict id = a.equal(d1, d2);
    if (id == Verdict::Equal) {
      c.pass++;
      continue;
    }
    bool separated = false, sure = true;
    for (int j = 0; j < probes_per_pair && !separated; j++) {
      auto l = d1, r = d2;
      int depth = 1 + (int)(g.rng() % 3);
      for (int k = 0; k < depth; k++) {
        if (g.rng() % 2 == 0) {
          auto arg = g.d();
          l = a.app(l, arg);
          r = a.app(r, arg);
        } else {
          auto s = g.s();
          l = a.sapp(l, s);
          r = a.sapp(r, s);
        }
      }
      Verdict v = a.equal(l, r);
      if (v == Verdict::Distinct) separated = true;
      if (v == Verdict::Unknown) sure = false;
    }
    if (separated)
      c.pass++;
    else if (id == Verdict::Distinct && sure) {
      c.fail++;
      rep.notes.push_back("extensionality candidate counterexample found");
    } else
      c.unknown++;
  }
  return rep;
}

// Sampled standardness probe: cons injectivity on sampled pairs and a
// decomposition probe on sampled streams. A stream with no cons
// decomposition refutes surjectivity, so the instance is not standard.
template <DecomposableStreams A, SamplerFor<A> G>
Report check_standard(const A& a, G& g, int n) {
  Report rep;
  rep.seed = g.seed;
  rep.laws = {{"cons-injective"}, {"cons-surjective"}};
  for (int i = 0; i < n; i++) {
    auto d1 = g.d(), d2 = g.d();
    auto s1 = g.s(), s2 = g.s();
    Verdict whole = a.stream_equal(a.cons(d1, s1), a.cons(d2, s2));
    Verdict vh = a.equal(d1, d2);
    Verdict vt = a.stream_equal(s1, s2);
    Verdict parts = (vh == Verdict::Equal && vt == Verdict::Equal)
                        ? Verdict::Equal
                        : (vh == Verdict::Distinct || vt == Verdict::Distinct
                               ? Verdict::Distinct
                               : Verdict::Unknown);
    if (whole == Verdict::Unknown || parts == Verdict::Unknown)
      rep.laws[0].unknown++;
    else if ((whole == Verdict::Equal) == (parts == Verdict::Equal))
      rep.laws[0].pass++;
    else
      rep.laws[0].fail++;
    auto s = g.s();
    if (a.decompose(s))
      rep.laws[1].pass++;
    else
      rep.laws[1].fail++;
  }
  if (rep.laws[1].fail > 0)
    rep.notes.push_back(
        "a sampled stream has no cons decomposition; not standard");
  return rep;
}

}  // namespace lmu
