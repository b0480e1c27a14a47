#pragma once

#include "spinweyl/numeric.hpp"

#include <vector>

namespace spinweyl {

using RatVec = std::vector<Rat>;

Rat dot_std(const RatVec& u, const RatVec& v);
RatVec vec_add(const RatVec& u, const RatVec& v);
RatVec vec_sub(const RatVec& u, const RatVec& v);
RatVec vec_scale(const RatVec& u, const Rat& s);
bool vec_is_zero(const RatVec& u);

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rat(0)) {}
  Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  static RatMat identity(int n);
  RatMat mul(const RatMat& o) const;
  RatVec apply(const RatVec& v) const;
};

// solves M x = b; requires a unique solution
RatVec solve_linear(RatMat M, RatVec b);

// square integer matrix
struct IntMat {
  int n = 0;
  std::vector<Int> a;

  IntMat() = default;
  explicit IntMat(int n_) : n(n_), a(size_t(n_) * n_, Int(0)) {}
  Int& at(int i, int j) { return a[size_t(i) * n + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * n + j]; }
  IntMat mul(const IntMat& o) const;
  Int trace() const;
  bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
};

// monic characteristic polynomial of A: det(xI - A) = x^n + c[1] x^(n-1) + ... + c[n];
// returned vector has length n+1 with c[0] = 1 (Faddeev-LeVerrier, exact)
std::vector<Int> char_poly(const IntMat& A);

// p(1) = det(I - A) and (-1)^n p(-1) = det(I + A)
Int det_one_minus(const std::vector<Int>& cp);
Int det_one_plus(const std::vector<Int>& cp);

// trace of A acting on the k-th exterior power: e_k of the eigenvalues,
// equal to (-1)^k c[k]
Int wedge_trace(const std::vector<Int>& cp, int k);

// Gram-Schmidt under the standard dot product; input vectors must be independent;
// outputs the orthogonal (not normalized) vectors and their squared norms
void gram_schmidt(const std::vector<RatVec>& in, std::vector<RatVec>& out,
                  std::vector<Rat>& sqnorm);

}  // namespace spinweyl
