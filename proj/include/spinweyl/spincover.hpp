#pragma once

#include <cstdint>
#include <vector>

#include "spinweyl/clifford.hpp"
#include "spinweyl/rootsys.hpp"

namespace spinweyl {

struct CoverClass {
  int64_t rep = 0;  // smallest cover index in the class
  int64_t size = 0;
  int order = 0;
  int wclass = 0;   // class of the image in the reflection group
};

// double cover of a Weyl group inside the Pin group of the negative definite
// form: generators square to the central element z. Cover elements are
// indexed 2w + s, where s = 1 means the z-twist of the canonical lift of w.
// The canonical lift of w is the primitivized product of the root vectors
// along its canonical reduced word.
struct SpinCover {
  WeylGroup W;
  OrthoBasis ob;
  CliffordAlg alg;  // d_i = -t * gstd_i
  int64_t N = 0;    // 2 |W|
  int64_t id = 0;
  int64_t z = 0;

  std::vector<uint8_t> right_sign;  // (w, i) -> 1 if the lift product flips sign
  std::vector<uint8_t> refl_sign;   // per positive root
  std::vector<CoverClass> classes;
  std::vector<int32_t> class_of;      // size N
  std::vector<uint8_t> wclass_split;  // per reflection-group class

  int wpart(int64_t x) const { return (int)(x >> 1); }
  int64_t negate(int64_t x) const { return x ^ 1; }  // multiply by z

  int64_t mult(int64_t x, int64_t y) const;
  int64_t inverse(int64_t x) const;
  int order_of(int64_t x) const;
  int64_t lift_gen(int i) const;        // lift of the i-th simple reflection
  int64_t lift_refl(int posroot) const; // positive lift of a root reflection
  int64_t power(int64_t x, int64_t e) const;

  CliffElem lift_elem(int w) const;  // canonical lift, recomputed from the word

  // exact character of the spin module (for odd rank the half_sign picks
  // one of the two models); normalized so the identity gives 2^floor(k/2)
  QuadC spin_char_value(int64_t x, int half_sign) const;
};

SpinCover build_spin_cover(WeylGroup W);

// central group-algebra element summing c(a)c(b)|coroot(a)||coroot(b)| times
// the product of the two reflection lifts over pairs of positive roots with
// s_a(b) < 0; stored as the total coefficient landing on each cover class
struct CasimirElement {
  std::vector<Quad> weight;  // per cover class
  Rat spin_scalar;           // |sum_a c(a) coroot(a)|^2, the spin eigenvalue
};

// cvals holds one c value per positive root and must be W-invariant; the
// construction cross-checks the alternative pair sum over non-orthogonal
// pairs weighted by sgn<a,b> |coroot(a)||coroot(b)| and verifies centrality
CasimirElement casimir_element(const SpinCover& C, const std::vector<Rat>& cvals);
CasimirElement casimir_element(const SpinCover& C, const Rat& c = Rat(1));

// per-root c values assigned by root length; a single-length system takes
// c_long everywhere
std::vector<Rat> parameter_by_length(const RootSystem& rs, const Rat& c_long,
                                     const Rat& c_short);

}  // namespace spinweyl
