#pragma once

#include "spinweyl/numeric.hpp"
#include "spinweyl/quad.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spinweyl {

// sparse element of Q(zeta_N): sum of coef * zeta_N^exp
struct Cyc {
  int64_t N = 1;
  std::map<int64_t, Rat> terms;  // exponent in [0,N) -> nonzero coefficient

  static Cyc zero(int64_t N) { return Cyc{N, {}}; }
  static Cyc rational(int64_t N, const Rat& r);
  static Cyc root(int64_t N, int64_t k, const Rat& coef = Rat(1));

  Cyc add(const Cyc& o) const;
  Cyc sub(const Cyc& o) const;
  Cyc mul(const Cyc& o) const;
  Cyc scale(const Rat& r) const;
  Cyc neg() const;
  Cyc conj() const;  // zeta -> zeta^(-1)
  bool structurally_zero() const { return terms.empty(); }
};

int64_t euler_phi(int64_t n);

// canonicalizer for a fixed modulus: reduces to the power basis
// {zeta^0, ..., zeta^(phi-1)} via the cyclotomic polynomial
struct CycField {
  int64_t N = 1;
  int phi = 1;
  std::vector<Int> poly;                   // Phi_N, degree phi, monic, index = power
  std::vector<std::vector<Rat>> pow_rows;  // x^k mod Phi_N for k in [phi, N)

  explicit CycField(int64_t N);

  std::vector<Rat> canon(const Cyc& v) const;
  bool is_zero(const Cyc& v) const;
  bool equal(const Cyc& u, const Cyc& v) const;
  bool rational_value(const Cyc& v, Rat& out) const;
  int cmp(const Cyc& u, const Cyc& v) const;  // lex on canonical vectors

  // recognize a + b sqrt2 + c sqrt3 + d sqrt6 + i(...); needs 24 | N;
  // false if the value is outside that subfield
  bool to_quadc(const Cyc& v, QuadC& out) const;
};

// embeddings into Q(zeta_N); need 24 | N for the square roots
Cyc quad_to_cyc(const Quad& q, int64_t N);
Cyc quadc_to_cyc(const QuadC& q, int64_t N);

// rewrite into the larger modulus M (the old modulus must divide M)
Cyc cyc_rebase(const Cyc& v, int64_t M);

// express a value of Q(zeta_FM.N) in the subfield Q(zeta_N); N must divide
// FM.N and the value must lie in the subfield
Cyc cyc_descend(const CycField& FM, const Cyc& v, int64_t N);

}  // namespace spinweyl
