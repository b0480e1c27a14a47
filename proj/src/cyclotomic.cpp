#include "spinweyl/cyclotomic.hpp"

#include <algorithm>

namespace spinweyl {

static int64_t mod_n(int64_t k, int64_t N) {
  k %= N;
  if (k < 0) k += N;
  return k;
}

Cyc Cyc::rational(int64_t N, const Rat& r) {
  Cyc v{N, {}};
  if (r != 0) v.terms[0] = r;
  return v;
}

Cyc Cyc::root(int64_t N, int64_t k, const Rat& coef) {
  Cyc v{N, {}};
  if (coef != 0) v.terms[mod_n(k, N)] = coef;
  return v;
}

Cyc Cyc::add(const Cyc& o) const {
  check(N == o.N, "Cyc::add: modulus mismatch");
  Cyc r = *this;
  for (const auto& [e, c] : o.terms) {
    Rat& slot = r.terms[e];
    slot += c;
    if (slot == 0) r.terms.erase(e);
  }
  return r;
}

Cyc Cyc::sub(const Cyc& o) const { return add(o.neg()); }

Cyc Cyc::mul(const Cyc& o) const {
  check(N == o.N, "Cyc::mul: modulus mismatch");
  Cyc r{N, {}};
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      int64_t e = mod_n(e1 + e2, N);
      Rat& slot = r.terms[e];
      slot += c1 * c2;
      if (slot == 0) r.terms.erase(e);
    }
  return r;
}

Cyc Cyc::scale(const Rat& s) const {
  Cyc r{N, {}};
  if (s == 0) return r;
  for (const auto& [e, c] : terms) r.terms[e] = c * s;
  return r;
}

Cyc Cyc::neg() const {
  Cyc r{N, {}};
  for (const auto& [e, c] : terms) r.terms[e] = -c;
  return r;
}

Cyc Cyc::conj() const {
  Cyc r{N, {}};
  for (const auto& [e, c] : terms) r.terms[mod_n(-e, N)] = c;
  return r;
}

int64_t euler_phi(int64_t n) {
  int64_t result = n;
  int64_t m = n;
  for (int64_t p = 2; p * p <= m; p++) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// integer polynomial division, exact; polynomials indexed by power
static std::vector<Int> poly_div_exact(const std::vector<Int>& num,
                                       const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  int dn = int(rem.size()) - 1, dd = int(den.size()) - 1;
  check(dd >= 0 && den[dd] == 1, "poly_div_exact: denominator not monic");
  std::vector<Int> q(dn - dd + 1, Int(0));
  for (int k = dn - dd; k >= 0; k--) {
    Int f = rem[k + dd];
    q[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; j++) rem[k + j] -= f * den[j];
  }
  for (const auto& c : rem) check(c == 0, "poly_div_exact: nonzero remainder");
  return q;
}

static std::vector<Int> cyclotomic_poly(int64_t N) {
  // Phi_d for all divisors d of N, ascending
  std::vector<int64_t> divs;
  for (int64_t d = 1; d <= N; d++)
    if (N % d == 0) divs.push_back(d);
  std::map<int64_t, std::vector<Int>> phi_of;
  for (int64_t d : divs) {
    std::vector<Int> p(d + 1, Int(0));  // x^d - 1
    p[d] = 1;
    p[0] = -1;
    for (int64_t e : divs) {
      if (e >= d || d % e != 0) continue;
      p = poly_div_exact(p, phi_of[e]);
    }
    phi_of[d] = std::move(p);
  }
  return phi_of[N];
}

CycField::CycField(int64_t N_) : N(N_) {
  check(N >= 1, "CycField: bad modulus");
  poly = cyclotomic_poly(N);
  phi = int(poly.size()) - 1;
  check(phi == int(euler_phi(N)), "CycField: degree mismatch");
  // x^k mod Phi for k in [phi, N)
  std::vector<Rat> cur(phi, Rat(0));
  // x^phi = -(c_0 + ... + c_{phi-1} x^{phi-1})
  for (int j = 0; j < phi; j++) cur[j] = Rat(-poly[j]);
  pow_rows.reserve(size_t(std::max<int64_t>(0, N - phi)));
  for (int64_t k = phi; k < N; k++) {
    pow_rows.push_back(cur);
    // multiply by x
    Rat top = cur[phi - 1];
    for (int j = phi - 1; j > 0; j--) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < phi; j++) cur[j] += top * Rat(-poly[j]);
  }
}

std::vector<Rat> CycField::canon(const Cyc& v) const {
  check(v.N == N, "CycField::canon: modulus mismatch");
  std::vector<Rat> out(phi, Rat(0));
  for (const auto& [e, c] : v.terms) {
    if (e < phi) {
      out[size_t(e)] += c;
    } else {
      const auto& row = pow_rows[size_t(e - phi)];
      for (int j = 0; j < phi; j++)
        if (row[j] != 0) out[j] += c * row[j];
    }
  }
  return out;
}

bool CycField::is_zero(const Cyc& v) const {
  for (const auto& c : canon(v))
    if (c != 0) return false;
  return true;
}

bool CycField::equal(const Cyc& u, const Cyc& v) const { return is_zero(u.sub(v)); }

bool CycField::rational_value(const Cyc& v, Rat& out) const {
  auto c = canon(v);
  for (int j = 1; j < phi; j++)
    if (c[j] != 0) return false;
  out = c[0];
  return true;
}

int CycField::cmp(const Cyc& u, const Cyc& v) const {
  auto a = canon(u), b = canon(v);
  for (int j = 0; j < phi; j++) {
    if (a[j] < b[j]) return -1;
    if (a[j] > b[j]) return 1;
  }
  return 0;
}

Cyc quad_to_cyc(const Quad& q, int64_t N) {
  check(N % 24 == 0, "quad_to_cyc: need 24 | N");
  Cyc r = Cyc::rational(N, q.a);
  // sqrt2 = zeta_8 + zeta_8^7, sqrt3 = zeta_12 + zeta_12^11
  Cyc s2 = Cyc::root(N, N / 8).add(Cyc::root(N, 7 * (N / 8)));
  Cyc s3 = Cyc::root(N, N / 12).add(Cyc::root(N, 11 * (N / 12)));
  r = r.add(s2.scale(q.b));
  r = r.add(s3.scale(q.c));
  r = r.add(s2.mul(s3).scale(q.d));
  return r;
}

Cyc quadc_to_cyc(const QuadC& q, int64_t N) {
  Cyc re = quad_to_cyc(q.re, N);
  Cyc im = quad_to_cyc(q.im, N);
  return re.add(im.mul(Cyc::root(N, N / 4)));
}

Cyc cyc_rebase(const Cyc& v, int64_t M) {
  check(M >= 1 && M % v.N == 0, "cyc_rebase: old modulus must divide new");
  int64_t f = M / v.N;
  Cyc out = Cyc::zero(M);
  for (const auto& [e, c] : v.terms) out.terms[e * f] = c;
  return out;
}

Cyc cyc_descend(const CycField& FM, const Cyc& v, int64_t N) {
  check(v.N == FM.N && FM.N % N == 0, "cyc_descend: moduli mismatch");
  if (N == FM.N) return v;
  int phiN = (int)euler_phi(N);
  int nr = FM.phi;
  // columns: images of zeta_N^j in the big power basis, last column = v
  std::vector<std::vector<Rat>> M(nr, std::vector<Rat>(phiN + 1, Rat(0)));
  for (int j = 0; j < phiN; j++) {
    std::vector<Rat> col = FM.canon(cyc_rebase(Cyc::root(N, j), FM.N));
    for (int i = 0; i < nr; i++) M[i][j] = col[i];
  }
  std::vector<Rat> rhs = FM.canon(v);
  for (int i = 0; i < nr; i++) M[i][phiN] = rhs[i];
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < phiN && row < nr; col++) {
    int p = -1;
    for (int i = row; i < nr; i++)
      if (M[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M[p], M[row]);
    Rat inv = Rat(1) / M[row][col];
    for (int j = col; j <= phiN; j++) M[row][j] *= inv;
    for (int i = 0; i < nr; i++) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (int j = col; j <= phiN; j++) M[i][j] -= f * M[row][j];
    }
    pivots.push_back(col);
    row++;
  }
  check(int(pivots.size()) == phiN, "cyc_descend: degenerate subfield basis");
  for (int i = row; i < nr; i++)
    check(M[i][phiN] == 0, "cyc_descend: value outside the subfield");
  Cyc out = Cyc::zero(N);
  for (int i = 0; i < phiN; i++)
    if (M[i][phiN] != 0) out.terms[pivots[i]] = M[i][phiN];
  return out;
}

bool CycField::to_quadc(const Cyc& v, QuadC& out) const {
  check(N % 24 == 0, "to_quadc: need 24 | N");
  // basis: 1, sqrt2, sqrt3, sqrt6, i, i sqrt2, i sqrt3, i sqrt6
  std::vector<Quad> qb = {Quad(Rat(1)), Quad::sqrt2(), Quad::sqrt3(), Quad::sqrt6()};
  std::vector<std::vector<Rat>> cols;
  for (int k = 0; k < 8; k++) {
    QuadC b = (k < 4) ? QuadC(qb[k]) : QuadC(Quad(), qb[k - 4]);
    cols.push_back(canon(quadc_to_cyc(b, N)));
  }
  std::vector<Rat> target = canon(v);
  // gaussian solve on the phi x 8 system
  int nr = phi, nc = 8;
  std::vector<std::vector<Rat>> M(nr, std::vector<Rat>(nc + 1, Rat(0)));
  for (int i = 0; i < nr; i++) {
    for (int j = 0; j < nc; j++) M[i][j] = cols[j][i];
    M[i][nc] = target[i];
  }
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < nc && row < nr; col++) {
    int p = -1;
    for (int i = row; i < nr; i++)
      if (M[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M[p], M[row]);
    Rat inv = Rat(1) / M[row][col];
    for (int j = col; j <= nc; j++) M[row][j] *= inv;
    for (int i = 0; i < nr; i++) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (int j = col; j <= nc; j++) M[i][j] -= f * M[row][j];
    }
    pivots.push_back(col);
    row++;
  }
  for (int i = row; i < nr; i++)
    if (M[i][nc] != 0) return false;  // outside the subfield
  check(int(pivots.size()) == nc, "to_quadc: degenerate basis");
  std::vector<Rat> x(nc, Rat(0));
  for (int i = 0; i < nc; i++) x[pivots[i]] = M[i][nc];
  out = QuadC(Quad(x[0], x[1], x[2], x[3]), Quad(x[4], x[5], x[6], x[7]));
  return true;
}

}  // namespace spinweyl
