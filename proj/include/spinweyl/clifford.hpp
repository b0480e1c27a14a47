#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "spinweyl/linalg.hpp"
#include "spinweyl/numeric.hpp"
#include "spinweyl/quad.hpp"
#include "spinweyl/rootsys.hpp"

namespace spinweyl {

// orthogonal basis of the reflection representation, obtained from the
// simple roots; generator i of the Clifford algebra squares to d[i]
struct OrthoBasis {
  Rat t;
  std::vector<RatVec> o;      // orthogonal vectors, ambient coordinates
  std::vector<Rat> gstd;      // squared norms under the standard dot
  std::vector<Rat> d;         // t * gstd
  RatMat simple_coords;       // column j = o_j expressed in the simple roots

  int k() const { return (int)o.size(); }
  RatVec coords(const RatVec& v) const;  // checks that v lies in the span
};

OrthoBasis build_ortho_basis(const RootSystem& rs);

// sparse element of the Clifford algebra; key bit i = generator e_i,
// blades are products in ascending generator order
struct CliffElem {
  std::map<uint32_t, Rat> c;

  bool is_zero() const { return c.empty(); }
  bool operator==(const CliffElem& o) const { return c == o.c; }
  bool operator!=(const CliffElem& o) const { return !(*this == o); }
};

struct CliffordAlg {
  int k = 0;
  std::vector<Rat> d;  // e_i^2 = d[i]

  static CliffElem scalar(const Rat& r);
  CliffElem vector_elem(const RatVec& coords) const;  // grade 1
  CliffElem mul(const CliffElem& x, const CliffElem& y) const;

  static CliffElem add(const CliffElem& x, const CliffElem& y);
  static CliffElem sub(const CliffElem& x, const CliffElem& y);
  static CliffElem neg(const CliffElem& x);
  static CliffElem scale(const CliffElem& x, const Rat& r);

  // reversal anti-automorphism: blade of grade g picks up (-1)^(g(g-1)/2)
  static CliffElem reverse(const CliffElem& x);
  // grade involution: (-1)^g
  static CliffElem grade_invol(const CliffElem& x);

  static bool is_scalar(const CliffElem& x);
  static Rat scalar_part(const CliffElem& x);
  static bool is_homogeneous_parity(const CliffElem& x, int& parity);

  // divides by the positive rational content: coefficients become coprime
  // integers, overall sign preserved
  static CliffElem primitivize(const CliffElem& x);

  // twisted conjugation v -> eps(a) a v a^(-1) of a versor on the grade-1
  // space, as an exact k x k matrix (columns = images of the e_i)
  RatMat vector_action(const CliffElem& a) const;
};

CliffordAlg algebra_of(const OrthoBasis& ob);

// unnormalized trace in the spin representation: 2^floor(k/2) times the
// scalar coefficient, plus for odd k the top-blade contribution
// half_sign * (-i)^m * sqrt(d_1 ... d_k) with m = (k-1)/2, half_sign = +-1.
// The square root must lie in the quadratic tower.
QuadC spin_trace_raw(const CliffordAlg& A, const CliffElem& x, int half_sign);

// numeric model of the spin representation (Hermitian generators)
struct GammaModel {
  int k = 0;
  int half_sign = 1;  // choice of the top generator for odd k
  int dim = 0;        // 2^floor(k/2)
  std::vector<Eigen::MatrixXcd> e;  // images of the generators, e_i = sqrt(d_i) Gamma_i
};

GammaModel build_gamma_model(const std::vector<Rat>& d, int half_sign = 1);
Eigen::MatrixXcd gamma_rep(const GammaModel& G, const CliffElem& x);

}  // namespace spinweyl
