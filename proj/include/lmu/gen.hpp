#pragma once

// Seeded random term generators for property tests. Plain modulo draws on
// mt19937_64 keep the sequences identical across standard libraries, which
// the reproducibility checks rely on.

#include <random>
#include <string>

#include "lmu/lm/term.hpp"
#include "lmu/scl/term.hpp"

namespace lmu {
namespace detail {

inline int draw(std::mt19937_64& rng, int n) {
  return (int)(rng() % (std::uint64_t)n);
}

inline const char* term_pool(int k) {
  static const char* names[] = {"x", "y", "z"};
  return names[k % 3];
}

inline const char* stream_pool(int k) {
  static const char* names[] = {"a", "b", "c"};
  return names[k % 3];
}

inline LmTerm gen_lm_rec(std::mt19937_64& rng, int budget, int dt, int ds) {
  if (budget <= 1) {
    int k = draw(rng, dt + 3);
    if (k < dt) return LmTerm::bound(k);
    return LmTerm::var(term_pool(k - dt));
  }
  switch (draw(rng, 6)) {
    case 0:
      return LmTerm::lam_raw(gen_lm_rec(rng, budget - 1, dt + 1, ds));
    case 1:
      return LmTerm::mu_raw(gen_lm_rec(rng, budget - 1, dt, ds + 1));
    case 2:
    case 3: {
      int left = 1 + draw(rng, budget - 1);
      return LmTerm::app(gen_lm_rec(rng, left, dt, ds),
                         gen_lm_rec(rng, budget - left, dt, ds));
    }
    case 4: {
      StreamRef s = ds > 0 && draw(rng, 2) == 0
                        ? StreamRef::bound(draw(rng, ds))
                        : StreamRef::free(StreamVar{stream_pool(draw(rng, 3))});
      return LmTerm::sapp_raw(gen_lm_rec(rng, budget - 1, dt, ds), s);
    }
    default: {
      int k = draw(rng, dt + 3);
      if (k < dt) return LmTerm::bound(k);
      return LmTerm::var(term_pool(k - dt));
    }
  }
}

inline SclTerm gen_scl_rec(std::mt19937_64& rng, int budget);

inline SclStream gen_scl_stream_rec(std::mt19937_64& rng, int budget) {
  if (budget <= 1 || detail::draw(rng, 3) == 0)
    return SclStream::var(stream_pool(draw(rng, 3)));
  int left = 1 + draw(rng, budget - 1);
  return SclStream::cons(gen_scl_rec(rng, left),
                         gen_scl_stream_rec(rng, budget - left));
}

inline SclTerm gen_scl_rec(std::mt19937_64& rng, int budget) {
  if (budget <= 1) {
    int k = draw(rng, 10);
    if (k < 3) return SclTerm::var(term_pool(k));
    return SclTerm::constant((SclConst)(k - 3));
  }
  switch (draw(rng, 4)) {
    case 0:
    case 1: {
      int left = 1 + draw(rng, budget - 1);
      return SclTerm::app(gen_scl_rec(rng, left), gen_scl_rec(rng, budget - left));
    }
    case 2: {
      int left = 1 + draw(rng, budget - 1);
      return SclTerm::sapp(gen_scl_rec(rng, left),
                           gen_scl_stream_rec(rng, budget - left));
    }
    default: {
      int k = draw(rng, 10);
      if (k < 3) return SclTerm::var(term_pool(k));
      return SclTerm::constant((SclConst)(k - 3));
    }
  }
}

}  // namespace detail

// Random terms with roughly `budget` nodes over free variables x, y, z and
// streams a, b, c. Generated terms never have dangling indices.
inline LmTerm gen_lm(std::mt19937_64& rng, int budget) {
  return detail::gen_lm_rec(rng, budget, 0, 0);
}

inline SclTerm gen_scl(std::mt19937_64& rng, int budget) {
  return detail::gen_scl_rec(rng, budget);
}

inline SclStream gen_scl_stream(std::mt19937_64& rng, int budget) {
  return detail::gen_scl_stream_rec(rng, budget);
}

}  // namespace lmu
