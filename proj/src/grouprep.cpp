#include "spinweyl/grouprep.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "spinweyl/linalg.hpp"

namespace spinweyl {

namespace {

// ---------- arithmetic mod a word-sized prime ----------

int64_t mod_norm(int64_t a, int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

int64_t mulmod(int64_t a, int64_t b, int64_t p) { return a * b % p; }

int64_t powmod(int64_t a, int64_t e, int64_t p) {
  a = mod_norm(a, p);
  int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

int64_t invmod(int64_t a, int64_t p) {
  a = mod_norm(a, p);
  check(a != 0, "invmod: zero");
  return powmod(a, p - 2, p);
}

bool is_prime_i64(int64_t q) {
  if (q < 2) return false;
  for (int64_t d = 2; d * d <= q; d++)
    if (q % d == 0) return false;
  return true;
}

// smallest prime p = 1 mod expo with p^2 > 4 |G|, beyond "after"
int64_t dixon_prime(int64_t expo, int64_t order, int64_t after) {
  for (int64_t p = expo + 1;; p += expo) {
    if (p <= after) continue;
    if (p * p <= 4 * order) continue;
    check(p < (int64_t(1) << 31), "dixon_prime: prime out of range");
    if (is_prime_i64(p)) return p;
  }
}

int64_t primitive_root(int64_t p) {
  std::vector<int64_t> qs;
  int64_t m = p - 1;
  for (int64_t d = 2; d * d <= m; d++)
    if (m % d == 0) {
      qs.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) qs.push_back(m);
  for (int64_t g = 2; g < p; g++) {
    bool ok = true;
    for (int64_t q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw invariant_error("primitive_root: none found");
}

// ---------- dense polynomials mod p, coeff[i] = x^i ----------

using Poly = std::vector<int64_t>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const Poly& a) { return int(a.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); j++)
      r[i + j] = mod_norm(r[i + j] + mulmod(a[i], b[j], p), p);
  }
  ptrim(r);
  return r;
}

Poly psub(Poly a, const Poly& b, int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); i++) a[i] = mod_norm(a[i] - b[i], p);
  ptrim(a);
  return a;
}

Poly pmonic(Poly a, int64_t p) {
  ptrim(a);
  if (a.empty()) return a;
  int64_t s = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, s, p);
  return a;
}

// remainder and optional quotient by a monic divisor
Poly pdivmod(Poly a, const Poly& f, int64_t p, Poly* quot) {
  check(!f.empty() && f.back() == 1, "pdivmod: divisor not monic");
  Poly q;
  if (quot) q.assign(a.size() > f.size() ? a.size() - f.size() + 1 : 1, 0);
  while (int(a.size()) >= int(f.size())) {
    int64_t c = a.back();
    int sh = int(a.size() - f.size());
    if (c != 0) {
      if (quot) q[sh] = c;
      for (size_t i = 0; i < f.size(); i++)
        a[sh + i] = mod_norm(a[sh + i] - mulmod(c, f[i], p), p);
    }
    a.pop_back();
  }
  ptrim(a);
  if (quot) {
    ptrim(q);
    *quot = q;
  }
  return a;
}

Poly pgcd(Poly a, Poly b, int64_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pdivmod(a, pmonic(b, p), p, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

Poly ppowmod(Poly base, int64_t e, const Poly& f, int64_t p) {
  Poly r = {1};
  base = pdivmod(std::move(base), f, p, nullptr);
  while (e > 0) {
    if (e & 1) r = pdivmod(pmul(r, base, p), f, p, nullptr);
    base = pdivmod(pmul(base, base, p), f, p, nullptr);
    e >>= 1;
  }
  return r;
}

// all roots in F_p of a polynomial known to split completely; deterministic
std::vector<int64_t> poly_roots(Poly f, int64_t p) {
  f = pmonic(std::move(f), p);
  check(pdeg(f) >= 1, "poly_roots: constant polynomial");
  // distinct-root part: gcd(f, x^p - x)
  Poly xp = ppowmod({0, 1}, p, f, p);
  Poly g = pgcd(f, psub(xp, {0, 1}, p), p);
  check(pdeg(g) >= 1, "poly_roots: no roots in the prime field");
  std::vector<int64_t> roots;
  std::vector<Poly> stack = {g};
  while (!stack.empty()) {
    Poly t = std::move(stack.back());
    stack.pop_back();
    if (pdeg(t) == 1) {
      roots.push_back(mod_norm(-t[0], p));
      continue;
    }
    bool split = false;
    for (int64_t a = 0; a < p; a++) {
      Poly s = ppowmod({a, 1}, (p - 1) / 2, t, p);
      Poly d = pgcd(t, psub(s, {1}, p), p);
      if (pdeg(d) >= 1 && pdeg(d) < pdeg(t)) {
        Poly q;
        pdivmod(t, d, p, &q);
        stack.push_back(std::move(d));
        stack.push_back(pmonic(std::move(q), p));
        split = true;
        break;
      }
    }
    check(split, "poly_roots: splitting stalled");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------- linear algebra over F_p ----------

using FpMat = std::vector<std::vector<int64_t>>;

Poly charpoly_fp(const FpMat& A, int64_t p) {
  int n = int(A.size());
  FpMat M = A;
  Poly out(n + 1, 0);
  out[n] = 1;
  int64_t ck = 0;
  for (int k = 1; k <= n; k++) {
    if (k > 1) {
      // M <- A (M + c_{k-1} I)
      FpMat B = M;
      for (int i = 0; i < n; i++) B[i][i] = mod_norm(B[i][i] + ck, p);
      for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
          int64_t s = 0;
          for (int l = 0; l < n; l++) s = mod_norm(s + mulmod(A[i][l], B[l][j], p), p);
          M[i][j] = s;
        }
    }
    int64_t tr = 0;
    for (int i = 0; i < n; i++) tr = mod_norm(tr + M[i][i], p);
    ck = mulmod(mod_norm(-tr, p), invmod(k, p), p);
    out[n - k] = ck;
  }
  return out;
}

// reduced echelon kernel basis, deterministic
std::vector<std::vector<int64_t>> kernel_fp(FpMat A, int64_t p) {
  int n = int(A.size());
  std::vector<int> piv_col;
  int row = 0;
  for (int col = 0; col < n && row < n; col++) {
    int pr = -1;
    for (int i = row; i < n; i++)
      if (A[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[pr], A[row]);
    int64_t s = invmod(A[row][col], p);
    for (int j = col; j < n; j++) A[row][j] = mulmod(A[row][j], s, p);
    for (int i = 0; i < n; i++) {
      if (i == row || A[i][col] == 0) continue;
      int64_t f = A[i][col];
      for (int j = col; j < n; j++) A[i][j] = mod_norm(A[i][j] - mulmod(f, A[row][j], p), p);
    }
    piv_col.push_back(col);
    row++;
  }
  std::vector<bool> is_piv(n, false);
  for (int c : piv_col) is_piv[c] = true;
  std::vector<std::vector<int64_t>> out;
  for (int c = 0; c < n; c++) {
    if (is_piv[c]) continue;
    std::vector<int64_t> v(n, 0);
    v[c] = 1;
    for (size_t i = 0; i < piv_col.size(); i++)
      v[piv_col[i]] = mod_norm(-A[i][c], p);
    out.push_back(std::move(v));
  }
  return out;
}

// reduced echelon basis of a subspace with pivot bookkeeping
struct EchBasis {
  std::vector<std::vector<int64_t>> rows;
  std::vector<int> piv;

  int dim() const { return int(rows.size()); }

  void insert(std::vector<int64_t> v, int64_t p) {
    for (size_t i = 0; i < rows.size(); i++) {
      int64_t c = v[piv[i]];
      if (c == 0) continue;
      for (size_t j = 0; j < v.size(); j++)
        v[j] = mod_norm(v[j] - mulmod(c, rows[i][j], p), p);
    }
    int pv = -1;
    for (size_t j = 0; j < v.size(); j++)
      if (v[j] != 0) {
        pv = int(j);
        break;
      }
    if (pv < 0) return;  // dependent
    int64_t s = invmod(v[pv], p);
    for (auto& x : v) x = mulmod(x, s, p);
    for (size_t i = 0; i < rows.size(); i++) {
      int64_t c = rows[i][pv];
      if (c == 0) continue;
      for (size_t j = 0; j < v.size(); j++)
        rows[i][j] = mod_norm(rows[i][j] - mulmod(c, v[j], p), p);
    }
    size_t at = 0;
    while (at < piv.size() && piv[at] < pv) at++;
    rows.insert(rows.begin() + at, std::move(v));
    piv.insert(piv.begin() + at, pv);
  }

  // coordinates in this basis; errors if v is outside the span
  std::vector<int64_t> express(const std::vector<int64_t>& v, int64_t p) const {
    std::vector<int64_t> co(rows.size());
    for (size_t i = 0; i < rows.size(); i++) co[i] = v[piv[i]];
    for (size_t j = 0; j < v.size(); j++) {
      int64_t s = 0;
      for (size_t i = 0; i < rows.size(); i++)
        s = mod_norm(s + mulmod(co[i], rows[i][j], p), p);
      check(s == mod_norm(v[j], p), "express: vector outside subspace");
    }
    return co;
  }
};

// M_i[j][k] = #{x in C_i : cls(x^-1 z_k) = j}, the class algebra structure constants
FpMat class_matrix(const GroupView& G, int i) {
  int c = G.nc();
  FpMat M(c, std::vector<int64_t>(c, 0));
  for (int64_t x : G.members[i]) {
    int64_t xi = G.inv(x);
    for (int k = 0; k < c; k++) M[G.cls[size_t(G.mul(xi, G.class_rep[k]))]][k]++;
  }
  return M;
}

// simultaneous eigenvectors of all class matrices mod p, normalized so the
// identity-class coordinate is 1; one per irreducible character
std::vector<std::vector<int64_t>> central_characters(const GroupView& G, int64_t p) {
  int c = G.nc();
  int idc = G.identity_class();
  std::vector<EchBasis> spaces(1);
  for (int j = 0; j < c; j++) {
    std::vector<int64_t> e(c, 0);
    e[j] = 1;
    spaces[0].insert(std::move(e), p);
  }
  for (int i = 0; i < c; i++) {
    if (i == idc) continue;
    bool done = true;
    for (const auto& sp : spaces)
      if (sp.dim() > 1) {
        done = false;
        break;
      }
    if (done) break;
    FpMat Mi = class_matrix(G, i);
    for (auto& row : Mi)
      for (auto& x : row) x = mod_norm(x, p);
    std::vector<EchBasis> next;
    for (auto& sp : spaces) {
      int d = sp.dim();
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // restriction of Mi to the invariant subspace
      FpMat R(d, std::vector<int64_t>(d, 0));
      for (int j = 0; j < d; j++) {
        std::vector<int64_t> w(c, 0);
        for (int g = 0; g < c; g++) {
          int64_t s = 0;
          for (int k = 0; k < c; k++) s = mod_norm(s + mulmod(Mi[g][k], sp.rows[j][k], p), p);
          w[g] = s;
        }
        std::vector<int64_t> co = sp.express(w, p);
        for (int g = 0; g < d; g++) R[g][j] = co[g];
      }
      std::vector<int64_t> rts = poly_roots(charpoly_fp(R, p), p);
      if (rts.size() <= 1) {
        next.push_back(std::move(sp));
        continue;
      }
      int total = 0;
      for (int64_t lam : rts) {
        FpMat S = R;
        for (int j = 0; j < d; j++) S[j][j] = mod_norm(S[j][j] - lam, p);
        auto K = kernel_fp(S, p);
        check(!K.empty(), "central_characters: empty eigenspace");
        EchBasis nb;
        for (const auto& co : K) {
          std::vector<int64_t> amb(c, 0);
          for (int j = 0; j < d; j++) {
            if (co[j] == 0) continue;
            for (int g = 0; g < c; g++)
              amb[g] = mod_norm(amb[g] + mulmod(co[j], sp.rows[j][g], p), p);
          }
          nb.insert(std::move(amb), p);
        }
        check(nb.dim() == int(K.size()), "central_characters: dependent eigenvectors");
        total += nb.dim();
        next.push_back(std::move(nb));
      }
      check(total == d, "central_characters: eigenspaces do not fill the subspace");
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<int64_t>> out;
  for (const auto& sp : spaces) {
    check(sp.dim() == 1, "central_characters: splitting incomplete");
    std::vector<int64_t> v = sp.rows[0];
    check(v[idc] != 0, "central_characters: identity coordinate vanished");
    int64_t s = invmod(v[idc], p);
    for (auto& x : v) x = mulmod(x, s, p);
    out.push_back(std::move(v));
  }
  check(int(out.size()) == c, "central_characters: wrong count");
  return out;
}

// cls(rep^s) for s in [0, order)
std::vector<std::vector<int>> power_classes(const GroupView& G) {
  int c = G.nc();
  std::vector<std::vector<int>> pw(c);
  for (int k = 0; k < c; k++) {
    int o = G.class_order[k];
    pw[k].resize(o);
    int64_t x = G.id;
    for (int s = 0; s < o; s++) {
      pw[k][s] = G.cls[size_t(x)];
      x = G.mul(x, G.class_rep[k]);
    }
    check(x == G.id, "power_classes: order mismatch");
  }
  return pw;
}

// eigenvalue multiplicities -> exact character value in Q(zeta_expo)
Cyc lift_from_mults(int64_t expo, int o, const std::vector<Int>& mults) {
  Cyc v = Cyc::zero(expo);
  for (int t = 0; t < o; t++) {
    if (mults[t] == 0) continue;
    v = v.add(Cyc::root(expo, (int64_t(t) * (expo / o)) % expo, Rat(mults[t])));
  }
  return v;
}

void canonical_sort_rows(const CycField& F, std::vector<Character>& rows) {
  int c = rows.empty() ? 0 : int(rows[0].values.size());
  std::vector<std::vector<std::vector<Rat>>> keys(rows.size());
  for (size_t i = 0; i < rows.size(); i++) {
    keys[i].reserve(c);
    for (int k = 0; k < c; k++) keys[i].push_back(F.canon(rows[i].values[k]));
  }
  std::vector<size_t> idx(rows.size());
  std::iota(idx.begin(), idx.end(), size_t(0));
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (rows[a].dim != rows[b].dim) return rows[a].dim < rows[b].dim;
    return keys[a] < keys[b];
  });
  std::vector<Character> out;
  out.reserve(rows.size());
  for (size_t i : idx) out.push_back(std::move(rows[i]));
  rows = std::move(out);
}

int64_t isqrt_i64(int64_t n) {
  int64_t t = 0;
  while ((t + 1) * (t + 1) <= n) t++;
  return t;
}

Int binom_int(int64_t n, int64_t k) {
  if (k < 0 || k > n) return Int(0);
  Int r = 1;
  for (int64_t i = 0; i < k; i++) {
    r *= Int(n - i);
    r /= Int(i + 1);
  }
  return r;
}

Int factorial_int(int n) {
  Int r = 1;
  for (int i = 2; i <= n; i++) r *= i;
  return r;
}

// permutation character of the Young subgroup S_lam at cycle type mu
Int sn_perm_value(const Partition& lam, const Partition& mu) {
  std::vector<int> len, cnt;
  for (int part : mu) {
    if (!len.empty() && len.back() == part)
      cnt.back()++;
    else {
      len.push_back(part);
      cnt.push_back(1);
    }
  }
  int L = int(len.size());
  std::map<std::pair<int, std::vector<int>>, Int> memo;
  std::function<Int(int, std::vector<int>&)> rec = [&](int row, std::vector<int>& rem) -> Int {
    if (row == int(lam.size())) {
      for (int r : rem)
        if (r != 0) return Int(0);
      return Int(1);
    }
    auto key = std::make_pair(row, rem);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    // choose a multiset of remaining cycles filling this row
    std::function<void(int, int, Int)> pick = [&](int li, int target, Int mult) {
      if (target == 0) {
        total += mult * rec(row + 1, rem);
        return;
      }
      if (li == L) return;
      int maxa = std::min(rem[li], target / len[li]);
      for (int a = 0; a <= maxa; a++) {
        Int m2 = mult * binom_int(rem[li], a);
        rem[li] -= a;
        pick(li + 1, target - a * len[li], m2);
        rem[li] += a;
      }
    };
    pick(0, lam[row], Int(1));
    memo[key] = total;
    return total;
  };
  std::vector<int> rem = cnt;
  return rec(0, rem);
}

// signed permutation data of one element on the coordinate axes
struct AxisInfo {
  std::vector<int> axis;     // root index of e_i (type B) or 2e_i (type C)
  std::vector<int> axis_of;  // positive root index -> coordinate, -1 otherwise
};

AxisInfo axis_info(const WeylGroup& W) {
  check(W.rs.type == 'B' || W.rs.type == 'C', "axis_info: need type B or C");
  int n = W.rank;
  AxisInfo ai;
  ai.axis.assign(n, -1);
  ai.axis_of.assign(W.m, -1);
  for (int r = 0; r < W.m; r++) {
    int nz = -1;
    bool single = true;
    for (int i = 0; i < n; i++) {
      if (W.rs.pos[r][i] == 0) continue;
      if (nz >= 0) {
        single = false;
        break;
      }
      nz = i;
    }
    if (single && nz >= 0) {
      ai.axis[nz] = r;
      ai.axis_of[r] = nz;
    }
  }
  for (int i = 0; i < n; i++) check(ai.axis[i] >= 0, "axis_info: missing axis root");
  return ai;
}

void signed_perm_bc(const WeylGroup& W, const AxisInfo& ai, int w, std::vector<int>& img,
                    std::vector<int>& sign) {
  int n = W.rank;
  img.resize(n);
  sign.resize(n);
  for (int i = 0; i < n; i++) {
    int r = W.root_image(w, ai.axis[i]);
    if (r < W.m) {
      img[i] = ai.axis_of[r];
      sign[i] = 1;
    } else {
      img[i] = ai.axis_of[r - W.m];
      sign[i] = -1;
    }
    check(img[i] >= 0, "signed_perm: image not an axis root");
  }
}

// image of an ambient vector in the root-lattice span under w
RatVec act_on_vector(const WeylGroup& W, int w, const RatVec& v) {
  int rank = W.rank;
  int amb = W.rs.ambient;
  RatMat M(amb, rank);
  for (int j = 0; j < rank; j++)
    for (int i = 0; i < amb; i++) M.at(i, j) = W.rs.simple[j][i];
  RatVec x = solve_linear(M, v);
  RatVec out(amb, Rat(0));
  for (int j = 0; j < rank; j++) {
    if (x[j] == 0) continue;
    int r = W.root_image(w, W.rs.simple_index[j]);
    RatVec rv = r < W.m ? W.rs.pos[r] : vec_scale(W.rs.pos[r - W.m], Rat(-1));
    out = vec_add(out, vec_scale(rv, x[j]));
  }
  return out;
}

void signed_perm_any(const WeylGroup& W, int w, std::vector<int>& img, std::vector<int>& sign) {
  char tp = W.rs.type;
  int n = W.rank;
  if (tp == 'B' || tp == 'C') {
    AxisInfo ai = axis_info(W);
    signed_perm_bc(W, ai, w, img, sign);
    return;
  }
  check(tp == 'D', "signed_perm: need type B, C or D");
  img.resize(n);
  sign.resize(n);
  for (int i = 0; i < n; i++) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    RatVec u = act_on_vector(W, w, e);
    int j = -1;
    for (int k = 0; k < n; k++) {
      if (u[k] == 0) continue;
      check(j < 0, "signed_perm: not a signed permutation");
      j = k;
    }
    check(j >= 0 && (u[j] == 1 || u[j] == -1), "signed_perm: bad image");
    img[i] = j;
    sign[i] = u[j] == 1 ? 1 : -1;
  }
}

// cycles of a signed permutation: underlying lengths split by cycle sign
void signed_cycles(const std::vector<int>& img, const std::vector<int>& sign, int lo, int hi,
                   Partition& pos, Partition& neg, int& neg_count) {
  std::vector<bool> seen(img.size(), false);
  pos.clear();
  neg.clear();
  neg_count = 0;
  for (int i = lo; i < hi; i++) {
    if (seen[i]) continue;
    int len = 0, s = 1, j = i;
    while (!seen[j]) {
      seen[j] = true;
      s *= sign[j];
      j = img[j];
      len++;
      check(j >= lo && j < hi, "signed_cycles: cycle leaves the block");
    }
    if (s == 1)
      pos.push_back(len);
    else {
      neg.push_back(len);
      neg_count++;
    }
  }
  std::sort(pos.begin(), pos.end(), std::greater<int>());
  std::sort(neg.begin(), neg.end(), std::greater<int>());
}

int find_pos_root(const RootSystem& rs, const RatVec& v) {
  for (int r = 0; r < int(rs.pos.size()); r++)
    if (rs.pos[r] == v) return r;
  return -1;
}

const CycField& field_for(const CharTable& T, int64_t N, std::unique_ptr<CycField>& hold) {
  if (N == T.exponent && T.field) return *T.field;
  hold = std::make_unique<CycField>(N);
  return *hold;
}

}  // namespace

// ---------- group views ----------

int64_t GroupView::power(int64_t x, int64_t e) const {
  int64_t r = id;
  for (int64_t i = 0; i < e; i++) r = mul(r, x);
  return r;
}

GroupView group_view(const WeylGroup& W) {
  GroupView V;
  V.n = W.n;
  V.id = W.identity;
  V.mul = [&W](int64_t a, int64_t b) { return int64_t(W.mult(int(a), int(b))); };
  V.inv = [&W](int64_t a) { return int64_t(W.inverse(int(a))); };
  int c = int(W.classes.size());
  V.cls.assign(W.class_of.begin(), W.class_of.end());
  V.members.resize(c);
  for (int64_t x = 0; x < V.n; x++) V.members[W.class_of[size_t(x)]].push_back(x);
  for (int k = 0; k < c; k++) {
    V.class_rep.push_back(W.classes[k].rep);
    V.class_size.push_back(W.classes[k].size);
    V.class_order.push_back(W.classes[k].order);
    V.sgn.push_back(W.length[W.classes[k].rep] % 2 == 0 ? 1 : -1);
  }
  return V;
}

GroupView group_view(const SpinCover& C) {
  GroupView V;
  V.n = C.N;
  V.id = C.id;
  V.z = C.z;
  V.mul = [&C](int64_t a, int64_t b) { return C.mult(a, b); };
  V.inv = [&C](int64_t a) { return C.inverse(a); };
  int c = int(C.classes.size());
  V.cls = C.class_of;
  V.members.resize(c);
  for (int64_t x = 0; x < V.n; x++) V.members[C.class_of[size_t(x)]].push_back(x);
  for (int k = 0; k < c; k++) {
    V.class_rep.push_back(C.classes[k].rep);
    V.class_size.push_back(C.classes[k].size);
    V.class_order.push_back(C.classes[k].order);
    int w = C.wpart(C.classes[k].rep);
    V.sgn.push_back(C.W.length[w] % 2 == 0 ? 1 : -1);
  }
  return V;
}

SubgroupView subgroup_view(const GroupView& G, std::vector<int64_t> elems,
                           const std::vector<int64_t>& gens) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto tp = std::make_shared<std::vector<int64_t>>(std::move(elems));
  auto sub_index = [tp](int64_t parent) -> int64_t {
    auto it = std::lower_bound(tp->begin(), tp->end(), parent);
    check(it != tp->end() && *it == parent, "subgroup_view: product left the subgroup");
    return it - tp->begin();
  };
  GroupView V;
  V.n = int64_t(tp->size());
  V.id = sub_index(G.id);
  if (G.z >= 0) {
    auto it = std::lower_bound(tp->begin(), tp->end(), G.z);
    if (it != tp->end() && *it == G.z) V.z = it - tp->begin();
  }
  std::function<int64_t(int64_t, int64_t)> pmul = G.mul;
  std::function<int64_t(int64_t)> pinv = G.inv;
  V.mul = [tp, pmul, sub_index](int64_t a, int64_t b) {
    return sub_index(pmul((*tp)[size_t(a)], (*tp)[size_t(b)]));
  };
  V.inv = [tp, pinv, sub_index](int64_t a) { return sub_index(pinv((*tp)[size_t(a)])); };

  std::vector<int64_t> sgens;
  for (int64_t g : gens) sgens.push_back(sub_index(g));
  V.cls.assign(size_t(V.n), -1);
  for (int64_t x0 = 0; x0 < V.n; x0++) {
    if (V.cls[size_t(x0)] >= 0) continue;
    int k = V.nc();
    std::vector<int64_t> orbit = {x0};
    V.cls[size_t(x0)] = k;
    for (size_t q = 0; q < orbit.size(); q++) {
      for (int64_t g : sgens) {
        int64_t y = V.mul(V.mul(g, orbit[q]), V.inv(g));
        if (V.cls[size_t(y)] < 0) {
          V.cls[size_t(y)] = k;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    int o = 1;
    int64_t x = x0;
    while (x != V.id) {
      x = V.mul(x, x0);
      o++;
    }
    V.class_rep.push_back(x0);
    V.class_size.push_back(int64_t(orbit.size()));
    V.class_order.push_back(o);
    V.members.push_back(std::move(orbit));
  }
  if (!G.sgn.empty())
    for (int k = 0; k < V.nc(); k++)
      V.sgn.push_back(G.sgn[G.cls[size_t((*tp)[size_t(V.class_rep[k])])]]);
  SubgroupView S;
  S.view = std::move(V);
  S.to_parent = *tp;
  return S;
}

// ---------- exact character table ----------

int CharTable::find_row(const std::vector<Cyc>& values) const {
  int c = nc();
  for (int i = 0; i < int(irr.size()); i++) {
    bool ok = true;
    for (int k = 0; k < c && ok; k++) ok = field->equal(irr[i].values[k], values[k]);
    if (ok) return i;
  }
  return -1;
}

CharTable character_table(const GroupView& G, const Int& max_order) {
  Int bound = max_order > 0 ? max_order : Int(200000);
  check(G.n >= 1, "character_table: empty group");
  if (Int(G.n) > bound)
    throw bound_error("character_table: order " + int_str(Int(G.n)) + " exceeds bound " +
                      int_str(bound));
  int c = G.nc();
  CharTable T;
  T.order = G.n;
  T.identity_class = G.identity_class();
  T.z_class = G.z >= 0 ? G.cls[size_t(G.z)] : -1;
  T.class_rep = G.class_rep;
  T.class_size = G.class_size;
  T.class_order = G.class_order;
  T.sgn = G.sgn;
  int64_t expo = 1;
  for (int o : G.class_order) expo = lcm_i64(expo, o);
  T.exponent = expo;
  T.field = std::make_shared<CycField>(expo);

  auto pw = power_classes(G);

  int64_t p = 0;
  std::vector<Character> rows;
  for (int attempt = 0;; attempt++) {
    p = dixon_prime(expo, G.n, p);
    try {
      rows.clear();
      auto omegas = central_characters(G, p);
      int64_t eta = primitive_root(p);
      int64_t zeta = powmod(eta, (p - 1) / expo, p);
      std::vector<int64_t> size_inv(c);
      for (int k = 0; k < c; k++) size_inv[k] = invmod(G.class_size[k] % p, p);
      int64_t ord_mod = mod_norm(G.n % p, p);
      int64_t root_cap = isqrt_i64(G.n);
      for (const auto& om : omegas) {
        int64_t s = 0;
        for (int k = 0; k < c; k++) {
          int64_t t = mulmod(om[k], om[G.inverse_class(k)], p);
          s = mod_norm(s + mulmod(t, size_inv[k], p), p);
        }
        int64_t dsq = mulmod(ord_mod, invmod(s, p), p);
        int64_t d = 0;
        for (int64_t t = 1; t <= root_cap; t++)
          if (mulmod(t, t, p) == dsq) {
            d = t;
            break;
          }
        check(d > 0, "character_table: dimension not recovered");
        Character ch;
        ch.dim = d;
        ch.values.resize(c, Cyc::zero(expo));
        for (int k = 0; k < c; k++) {
          int o = G.class_order[k];
          int64_t zo = powmod(zeta, expo / o, p);
          int64_t oinv = invmod(o, p);
          std::vector<Int> mults(o);
          Int msum = 0;
          for (int t = 0; t < o; t++) {
            int64_t acc = 0;
            for (int s2 = 0; s2 < o; s2++) {
              int64_t chi = mulmod(mulmod(d, om[pw[k][s2]], p), size_inv[pw[k][s2]], p);
              int64_t e = (int64_t(o) - (int64_t(s2) * t) % o) % o;
              acc = mod_norm(acc + mulmod(chi, powmod(zo, e, p), p), p);
            }
            int64_t mt = mulmod(acc, oinv, p);
            check(mt <= d, "character_table: eigenvalue multiplicity exceeds dimension");
            mults[t] = mt;
            msum += mt;
          }
          check(msum == d, "character_table: multiplicities do not sum to dimension");
          ch.values[k] = lift_from_mults(expo, o, mults);
        }
        rows.push_back(std::move(ch));
      }
      break;
    } catch (const invariant_error&) {
      if (attempt >= 2) throw;
    }
  }
  T.prime = p;

  Int dimsq = 0;
  for (const auto& r : rows) dimsq += r.dim * r.dim;
  check(dimsq == Int(G.n), "character_table: dimensions violate the order identity");

  canonical_sort_rows(*T.field, rows);
  T.irr = std::move(rows);

  for (auto& r : T.irr) {
    if (T.z_class < 0) continue;
    Rat zr;
    check(T.field->rational_value(r.values[T.z_class], zr),
          "character_table: central value must be rational");
    if (zr == -Rat(r.dim))
      r.genuine = true;
    else
      check(zr == Rat(r.dim), "character_table: central value must be +-dim");
  }
  if (!T.sgn.empty()) {
    for (int i = 0; i < int(T.irr.size()); i++) {
      std::vector<Cyc> tw(c, Cyc::zero(expo));
      for (int k = 0; k < c; k++) tw[k] = T.irr[i].values[k].scale(Rat(T.sgn[k]));
      int j = T.find_row(tw);
      check(j >= 0, "character_table: sign twist not in the table");
      T.irr[i].associate = j;
    }
    for (int i = 0; i < int(T.irr.size()); i++)
      check(T.irr[T.irr[i].associate].associate == i, "character_table: twist not involutive");
  }

  // exact row orthogonality is the gate for the whole construction
  for (int i = 0; i < int(T.irr.size()); i++)
    for (int j = i; j < int(T.irr.size()); j++) {
      Cyc acc = Cyc::zero(expo);
      for (int k = 0; k < c; k++) {
        Cyc t = T.irr[i].values[k].mul(T.irr[j].values[k].conj());
        acc = acc.add(t.scale(Rat(T.class_size[k])));
      }
      Rat val;
      check(T.field->rational_value(acc, val), "character_table: irrational pairing");
      check(val == (i == j ? Rat(G.n) : Rat(0)), "character_table: row orthogonality failed");
    }
  return T;
}

// ---------- class function operations ----------

ClassFn char_fn(const CharTable& T, int row) {
  check(row >= 0 && row < int(T.irr.size()), "char_fn: bad row");
  return T.irr[row].values;
}

ClassFn rational_fn(const CharTable& T, const std::vector<Rat>& vals) {
  check(int(vals.size()) == T.nc(), "rational_fn: size mismatch");
  ClassFn f;
  for (const Rat& v : vals) f.push_back(Cyc::rational(T.exponent, v));
  return f;
}

std::vector<Rat> rational_values(const CharTable& T, int row) {
  check(row >= 0 && row < int(T.irr.size()), "rational_values: bad row");
  std::vector<Rat> out(T.nc());
  for (int k = 0; k < T.nc(); k++)
    check(T.field->rational_value(T.irr[row].values[k], out[k]),
          "rational_values: irrational value");
  return out;
}

Cyc inner_product_cyc(const CharTable& T, const ClassFn& f, const ClassFn& g) {
  check(int(f.size()) == T.nc() && int(g.size()) == T.nc(), "inner_product: size mismatch");
  check(!f.empty() && f[0].N == g[0].N, "inner_product: modulus mismatch");
  Cyc acc = Cyc::zero(f[0].N);
  for (int k = 0; k < T.nc(); k++)
    acc = acc.add(f[k].mul(g[k].conj()).scale(Rat(T.class_size[k])));
  return acc.scale(Rat(1) / Rat(T.order));
}

Rat inner_product(const CharTable& T, const ClassFn& f, const ClassFn& g) {
  Cyc acc = inner_product_cyc(T, f, g);
  std::unique_ptr<CycField> hold;
  const CycField& F = field_for(T, acc.N, hold);
  Rat out;
  check(F.rational_value(acc, out), "inner_product: irrational result");
  return out;
}

std::vector<Int> decompose(const CharTable& T, const ClassFn& f) {
  std::vector<Int> out;
  for (int i = 0; i < int(T.irr.size()); i++) {
    Rat m = inner_product(T, f, char_fn(T, i));
    check(rat_den(m) == 1 && m >= 0, "decompose: multiplicity not a nonnegative integer");
    out.push_back(rat_num(m));
  }
  return out;
}

static void binop_checks(const CharTable& T, const ClassFn& f, const ClassFn& g) {
  check(int(f.size()) == T.nc() && int(g.size()) == T.nc(), "class function size mismatch");
  check(!f.empty() && f[0].N == g[0].N, "class function modulus mismatch");
}

ClassFn tensor_fn(const CharTable& T, const ClassFn& f, const ClassFn& g) {
  binop_checks(T, f, g);
  ClassFn out;
  for (size_t k = 0; k < f.size(); k++) out.push_back(f[k].mul(g[k]));
  return out;
}

ClassFn add_fn(const CharTable& T, const ClassFn& f, const ClassFn& g) {
  binop_checks(T, f, g);
  ClassFn out;
  for (size_t k = 0; k < f.size(); k++) out.push_back(f[k].add(g[k]));
  return out;
}

ClassFn sub_fn(const CharTable& T, const ClassFn& f, const ClassFn& g) {
  binop_checks(T, f, g);
  ClassFn out;
  for (size_t k = 0; k < f.size(); k++) out.push_back(f[k].sub(g[k]));
  return out;
}

ClassFn induce(const GroupView& G, const CharTable& TG, const SubgroupView& H,
               const std::vector<Cyc>& fH) {
  check(int(fH.size()) == H.view.nc(), "induce: size mismatch");
  check(!fH.empty() && TG.exponent % fH[0].N == 0, "induce: modulus does not divide");
  std::vector<Cyc> fr;
  for (const Cyc& v : fH) fr.push_back(cyc_rebase(v, TG.exponent));
  ClassFn S(TG.nc(), Cyc::zero(TG.exponent));
  for (int64_t x = 0; x < H.view.n; x++) {
    int k = G.cls[size_t(H.to_parent[size_t(x)])];
    S[k] = S[k].add(fr[H.view.cls[size_t(x)]]);
  }
  int64_t h = H.view.n;
  for (int k = 0; k < TG.nc(); k++)
    S[k] = S[k].scale(Rat(Int(G.n)) / Rat(Int(h) * Int(TG.class_size[k])));
  return S;
}

std::vector<Cyc> restrict_fn(const GroupView& G, const SubgroupView& H, const ClassFn& fG) {
  check(int(fG.size()) == G.nc(), "restrict_fn: size mismatch");
  std::vector<Cyc> out;
  for (int k = 0; k < H.view.nc(); k++) {
    int64_t rep = H.to_parent[size_t(H.view.class_rep[k])];
    out.push_back(fG[G.cls[size_t(rep)]]);
  }
  return out;
}

// ---------- reflection-representation functionals ----------

std::vector<Rat> wedge_character(const WeylGroup& W, int k) {
  check(k >= 0 && k <= W.rank, "wedge_character: bad degree");
  std::vector<Rat> out;
  for (const auto& cl : W.classes) out.push_back(Rat(wedge_trace(cl.charpoly, k)));
  return out;
}

std::vector<Rat> det_one_minus_classes(const WeylGroup& W) {
  std::vector<Rat> out;
  for (const auto& cl : W.classes) out.push_back(Rat(det_one_minus(cl.charpoly)));
  return out;
}

std::vector<Rat> det_one_plus_classes(const WeylGroup& W) {
  std::vector<Rat> out;
  for (const auto& cl : W.classes) out.push_back(Rat(det_one_plus(cl.charpoly)));
  return out;
}

Int elliptic_pairing(const CharTable& T, const ClassFn& f, const ClassFn& g,
                     const std::vector<Rat>& det1m) {
  binop_checks(T, f, g);
  check(int(det1m.size()) == T.nc(), "elliptic_pairing: size mismatch");
  Cyc acc = Cyc::zero(f[0].N);
  for (int k = 0; k < T.nc(); k++)
    acc = acc.add(f[k].mul(g[k].conj()).scale(det1m[k] * Rat(T.class_size[k])));
  acc = acc.scale(Rat(1) / Rat(T.order));
  std::unique_ptr<CycField> hold;
  const CycField& F = field_for(T, acc.N, hold);
  Rat out;
  check(F.rational_value(acc, out), "elliptic_pairing: irrational result");
  check(rat_den(out) == 1, "elliptic_pairing: non-integral result");
  return rat_num(out);
}

std::vector<Rat> pullback_rat(const SpinCover& C, const std::vector<Rat>& onW) {
  check(onW.size() == C.W.classes.size(), "pullback_rat: size mismatch");
  std::vector<Rat> out;
  for (const auto& cl : C.classes) out.push_back(onW[cl.wclass]);
  return out;
}

std::vector<Rat> cover_det_one_minus(const SpinCover& C) {
  std::vector<Rat> out;
  for (const auto& cl : C.classes)
    out.push_back(Rat(det_one_minus(C.W.classes[cl.wclass].charpoly)));
  return out;
}

std::vector<Rat> cover_det_one_plus(const SpinCover& C) {
  std::vector<Rat> out;
  for (const auto& cl : C.classes)
    out.push_back(Rat(det_one_plus(C.W.classes[cl.wclass].charpoly)));
  return out;
}

int elliptic_class_count(const WeylGroup& W) {
  int c = 0;
  for (const auto& cl : W.classes)
    if (cl.elliptic) c++;
  return c;
}

std::pair<int, int> elliptic_space_dims(const SpinCover& C) {
  int ell = 0, split = 0;
  for (size_t k = 0; k < C.W.classes.size(); k++) {
    if (!C.W.classes[k].elliptic) continue;
    ell++;
    if (C.wclass_split[k]) split++;
  }
  return {ell, split};
}

ClassFn spin_char_fn(const SpinCover& C, const CharTable& T, int half_sign) {
  int64_t M = lcm_i64(T.exponent, 24);
  ClassFn out;
  if (M == T.exponent) {
    for (int k = 0; k < T.nc(); k++)
      out.push_back(quadc_to_cyc(C.spin_char_value(T.class_rep[k], half_sign), M));
  } else {
    CycField FM(M);
    for (int k = 0; k < T.nc(); k++) {
      Cyc big = quadc_to_cyc(C.spin_char_value(T.class_rep[k], half_sign), M);
      out.push_back(cyc_descend(FM, big, T.exponent));
    }
  }
  return out;
}

QuadC casimir_scalar(const CharTable& T, const CasimirElement& om, int row) {
  check(int(om.weight.size()) == T.nc(), "casimir_scalar: class count mismatch");
  int64_t M = lcm_i64(T.exponent, 24);
  CycField FM(M);
  Cyc acc = Cyc::zero(M);
  const Character& chi = T.irr[size_t(row)];
  for (int k = 0; k < T.nc(); k++) {
    if (om.weight[size_t(k)].is_zero()) continue;
    Cyc w = quad_to_cyc(om.weight[size_t(k)], M);
    acc = acc.add(w.mul(cyc_rebase(chi.values[size_t(k)], M)));
  }
  acc = acc.scale(Rat(1) / Rat(chi.dim));
  QuadC out;
  check(FM.to_quadc(acc, out), "casimir_scalar: value outside the quadratic tower");
  return out;
}

bool iota_S_surjective(const SpinCover& C) {
  for (const auto& cl : C.classes) {
    if (!C.wclass_split[cl.wclass]) continue;
    if (C.spin_char_value(cl.rep, 1).is_zero()) return false;
  }
  return true;
}

ClassFn xi_map(const CharTable& T, int row, int dimV) {
  check(row >= 0 && row < int(T.irr.size()), "xi_map: bad row");
  check(!T.sgn.empty(), "xi_map: table lacks sign data");
  check(T.irr[row].genuine, "xi_map: row is not genuine");
  int eps = dimV % 2 == 0 ? 1 : -1;
  ClassFn out;
  for (int k = 0; k < T.nc(); k++)
    out.push_back(T.irr[row].values[k].scale(Rat(T.sgn[k] + eps)));
  return out;
}

std::vector<int> genuine_rows(const CharTable& T) {
  std::vector<int> out;
  for (int i = 0; i < int(T.irr.size()); i++)
    if (T.irr[i].genuine) out.push_back(i);
  return out;
}

int genuine_count_mod_assoc(const CharTable& T) {
  check(!T.sgn.empty(), "genuine_count_mod_assoc: table lacks sign data");
  int count = 0;
  for (int i = 0; i < int(T.irr.size()); i++) {
    if (!T.irr[i].genuine) continue;
    check(T.irr[T.irr[i].associate].genuine, "genuine_count_mod_assoc: twist not genuine");
    if (T.irr[i].associate >= i) count++;
  }
  return count;
}

std::vector<int> b_invariants(const WeylGroup& W, const CharTable& T) {
  int c = T.nc();
  check(int(W.classes.size()) == c, "b_invariants: class count mismatch");
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < int(T.irr.size()); i++) rows.push_back(rational_values(T, i));
  // traces of powers per class
  std::vector<std::vector<int>> pcls(c);
  for (int k = 0; k < c; k++) {
    int o = T.class_order[k];
    pcls[k].resize(o);
    int x = W.identity;
    for (int s = 0; s < o; s++) {
      pcls[k][s] = W.class_of[x];
      x = W.mult(x, int(T.class_rep[k]));
    }
  }
  auto trace_of = [&](int cl) -> Rat { return -Rat(W.classes[cl].charpoly[1]); };
  int maxd = W.m;
  std::vector<std::vector<Rat>> h = {std::vector<Rat>(c, Rat(1))};
  std::vector<int> b(rows.size(), -1);
  int remaining = int(rows.size());
  for (int d = 0; d <= maxd && remaining > 0; d++) {
    if (d > 0) {
      std::vector<Rat> hd(c, Rat(0));
      for (int k = 0; k < c; k++) {
        Rat s = 0;
        int o = T.class_order[k];
        for (int j = 1; j <= d; j++) s += trace_of(pcls[k][j % o]) * h[d - j][k];
        hd[k] = s / Rat(d);
      }
      h.push_back(std::move(hd));
    }
    for (size_t i = 0; i < rows.size(); i++) {
      if (b[i] >= 0) continue;
      Rat s = 0;
      for (int k = 0; k < c; k++) s += Rat(T.class_size[k]) * rows[i][k] * h[d][k];
      if (s != 0) {
        b[i] = d;
        remaining--;
      }
    }
  }
  check(remaining == 0, "b_invariants: some row missed the coinvariant degrees");
  return b;
}

// ---------- symmetric group tables ----------

Int sn_class_size(int n, const Partition& mu) {
  check(partition_weight(mu) == n, "sn_class_size: weight mismatch");
  Int z = 1;
  int run = 1;
  for (size_t i = 0; i < mu.size(); i++) {
    z *= mu[i];
    if (i + 1 < mu.size() && mu[i + 1] == mu[i])
      run++;
    else {
      z *= factorial_int(run);
      run = 1;
    }
  }
  return factorial_int(n) / z;
}

int sn_class_index(const SnTable& S, const Partition& mu) {
  for (int i = 0; i < int(S.classes.size()); i++)
    if (S.classes[i] == mu) return i;
  throw invariant_error("sn_class_index: class not found");
}

Int sn_dimension(const Partition& lam) {
  int n = partition_weight(lam);
  Partition tr = transpose(lam);
  Int hooks = 1;
  for (int i = 0; i < int(lam.size()); i++)
    for (int j = 0; j < lam[i]; j++) hooks *= Int(lam[i] - j + tr[j] - i - 1);
  return factorial_int(n) / hooks;
}

SnTable sn_character_table(int n) {
  check(n >= 0, "sn_character_table: negative n");
  SnTable S;
  S.n = n;
  S.classes = partitions(n);
  int c = int(S.classes.size());
  for (const auto& mu : S.classes) S.class_size.push_back(sn_class_size(n, mu));
  Int nf = factorial_int(n);
  std::vector<Partition> order = partitions(n);
  std::sort(order.begin(), order.end(), std::greater<Partition>());
  auto inner = [&](const std::vector<Int>& u, const std::vector<Int>& v) -> Int {
    Int s = 0;
    for (int k = 0; k < c; k++) s += S.class_size[k] * u[k] * v[k];
    check(s % nf == 0, "sn_character_table: non-integral inner product");
    return s / nf;
  };
  for (const auto& lam : order) {
    std::vector<Int> row(c);
    for (int k = 0; k < c; k++) row[k] = sn_perm_value(lam, S.classes[k]);
    for (size_t j = 0; j < S.rows.size(); j++) {
      Int m = inner(row, S.rows[j]);
      if (m == 0) continue;
      for (int k = 0; k < c; k++) row[k] -= m * S.rows[j][k];
    }
    check(inner(row, row) == 1, "sn_character_table: peel left a reducible row");
    S.labels.push_back(lam);
    S.rows.push_back(std::move(row));
  }
  Int dimsq = 0;
  int idc = sn_class_index(S, Partition(n, 1));
  for (const auto& row : S.rows) {
    check(row[idc] > 0, "sn_character_table: nonpositive dimension");
    dimsq += row[idc] * row[idc];
  }
  check(dimsq == nf, "sn_character_table: dimension identity failed");
  return S;
}

// ---------- cycle types of classical Weyl elements ----------

Partition cycle_type_of(const WeylGroup& W, int w) {
  check(W.rs.type == 'A', "cycle_type_of: need type A");
  int r = W.rank;
  int pts = r + 1;
  std::vector<int> pi(pts, -1);
  for (int i = 0; i < r; i++) {
    RatVec v(W.rs.ambient, Rat(0));
    v[i] = 1;
    v[i + 1] = -1;
    int ri = find_pos_root(W.rs, v);
    check(ri >= 0, "cycle_type_of: chain root missing");
    int im = W.root_image(w, ri);
    RatVec u = im < W.m ? W.rs.pos[im] : vec_scale(W.rs.pos[im - W.m], Rat(-1));
    int plus = -1, minus = -1;
    for (int k = 0; k < pts; k++) {
      if (u[k] == 1) plus = k;
      if (u[k] == -1) minus = k;
    }
    check(plus >= 0 && minus >= 0, "cycle_type_of: image not a root vector");
    check(pi[i] < 0 || pi[i] == plus, "cycle_type_of: inconsistent chain");
    pi[i] = plus;
    check(pi[i + 1] < 0 || pi[i + 1] == minus, "cycle_type_of: inconsistent chain");
    pi[i + 1] = minus;
  }
  std::vector<bool> hit(pts, false);
  for (int x : pi) {
    check(x >= 0 && !hit[x], "cycle_type_of: not a permutation");
    hit[x] = true;
  }
  Partition out;
  std::vector<bool> seen(pts, false);
  for (int i = 0; i < pts; i++) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = pi[j];
      len++;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

Bipartition signed_cycle_type(const WeylGroup& W, int w) {
  std::vector<int> img, sign;
  signed_perm_any(W, w, img, sign);
  Bipartition bp;
  int negc = 0;
  signed_cycles(img, sign, 0, W.rank, bp.first, bp.second, negc);
  return bp;
}

// ---------- hyperoctahedral parameterization ----------

int BnTable::row_of(const Bipartition& lm) const {
  for (int i = 0; i < int(labels.size()); i++)
    if (labels[i] == lm) return i;
  throw invariant_error("BnTable::row_of: label not found");
}

BnTable bn_table(const WeylGroup& W, const GroupView& view) {
  check(W.rs.type == 'B' || W.rs.type == 'C', "bn_table: need type B or C");
  int n = W.rank;
  BnTable B;
  B.n = n;
  B.table = character_table(view);
  AxisInfo ai = axis_info(W);
  for (int k = 0; k < B.table.nc(); k++)
    B.class_type.push_back(signed_cycle_type(W, int(B.table.class_rep[k])));

  std::vector<SnTable> sn;
  for (int k = 0; k <= n; k++) sn.push_back(sn_character_table(k));
  auto sn_row = [&](int k, const Partition& lam) -> int {
    for (int i = 0; i < int(sn[k].labels.size()); i++)
      if (sn[k].labels[i] == lam) return i;
    throw invariant_error("bn_table: symmetric group label not found");
  };

  B.labels.assign(B.table.irr.size(), Bipartition{});
  std::vector<bool> seen(B.table.irr.size(), false);
  std::vector<int> img, sign;
  for (int a = 0; a <= n; a++) {
    // block subgroup: signed permutations preserving the first a coordinates
    std::vector<int64_t> elems;
    for (int64_t x = 0; x < view.n; x++) {
      signed_perm_bc(W, ai, int(x), img, sign);
      bool keep = true;
      for (int i = 0; i < a && keep; i++) keep = img[i] < a;
      if (keep) elems.push_back(x);
    }
    std::vector<int64_t> gens;
    for (int i = 0; i < n - 1; i++) {
      if (i == a - 1) continue;
      RatVec v(W.rs.ambient, Rat(0));
      v[i] = 1;
      v[i + 1] = -1;
      int ri = find_pos_root(W.rs, v);
      check(ri >= 0, "bn_table: transposition root missing");
      gens.push_back(W.refl[ri]);
    }
    if (a > 0) gens.push_back(W.refl[ai.axis[0]]);
    if (a < n) gens.push_back(W.refl[ai.axis[a]]);
    SubgroupView H = subgroup_view(view, elems, gens);

    // per class: underlying types of the two blocks and the twist sign
    struct BlockData {
      Partition u1, u2;
      int neg2 = 0;
    };
    std::vector<BlockData> bd(H.view.nc());
    for (int k = 0; k < H.view.nc(); k++) {
      signed_perm_bc(W, ai, int(H.to_parent[size_t(H.view.class_rep[k])]), img, sign);
      Partition p1, n1, p2, n2;
      int nc1 = 0, nc2 = 0;
      signed_cycles(img, sign, 0, a, p1, n1, nc1);
      signed_cycles(img, sign, a, n, p2, n2, nc2);
      BlockData d;
      d.u1 = p1;
      d.u1.insert(d.u1.end(), n1.begin(), n1.end());
      std::sort(d.u1.begin(), d.u1.end(), std::greater<int>());
      d.u2 = p2;
      d.u2.insert(d.u2.end(), n2.begin(), n2.end());
      std::sort(d.u2.begin(), d.u2.end(), std::greater<int>());
      d.neg2 = nc2;
      bd[k] = d;
    }

    for (const auto& lam : partitions(a))
      for (const auto& mu : partitions(n - a)) {
        int rl = sn_row(a, lam);
        int rm = sn_row(n - a, mu);
        std::vector<Cyc> fH;
        for (int k = 0; k < H.view.nc(); k++) {
          Int v = sn[a].rows[rl][sn_class_index(sn[a], bd[k].u1)] *
                  sn[n - a].rows[rm][sn_class_index(sn[n - a], bd[k].u2)];
          if (bd[k].neg2 % 2 == 1) v = -v;
          fH.push_back(Cyc::rational(B.table.exponent, Rat(v)));
        }
        ClassFn ind = induce(view, B.table, H, fH);
        int row = B.table.find_row(ind);
        check(row >= 0, "bn_table: induced character is not irreducible");
        check(!seen[row], "bn_table: label collision");
        seen[row] = true;
        B.labels[row] = Bipartition{lam, mu};
      }
  }
  for (bool s : seen) check(s, "bn_table: some row unlabeled");
  return B;
}

std::vector<Rat> bn_character(const BnTable& B, const Bipartition& lm) {
  return rational_values(B.table, B.row_of(lm));
}

CoverParam read_parameterization(const SpinCover& C, const CharTable& Tcov, const BnTable& B) {
  int n = C.W.rank;
  check(B.n == n, "read_parameterization: rank mismatch");
  ClassFn spinP = spin_char_fn(C, Tcov, 1);
  ClassFn spinM = spin_char_fn(C, Tcov, -1);
  CoverParam P;
  P.labels = partitions(n);
  for (const auto& lam : P.labels) {
    std::vector<Rat> onW = bn_character(B, Bipartition{lam, {}});
    std::vector<Rat> pull = pullback_rat(C, onW);
    auto located = [&](const ClassFn& spin) {
      ClassFn f;
      for (int k = 0; k < Tcov.nc(); k++) f.push_back(spin[k].scale(pull[k]));
      int row = Tcov.find_row(f);
      check(row >= 0, "read_parameterization: product is not irreducible");
      check(Tcov.irr[row].genuine, "read_parameterization: located row not genuine");
      return row;
    };
    if (n % 2 == 0) {
      P.rows.push_back({located(spinP)});
    } else {
      int r1 = located(spinP);
      int r2 = located(spinM);
      check(r1 != r2, "read_parameterization: halves coincide");
      check(Tcov.irr[r1].associate == r2, "read_parameterization: halves not associates");
      P.rows.push_back({std::min(r1, r2), std::max(r1, r2)});
    }
  }
  return P;
}

// even sign changes: kernel of the product-of-signs character
static std::vector<int> dn_root_indices(const WeylGroup& W) {
  int n = W.rank;
  std::vector<int> out;
  for (int i = 0; i < n - 1; i++) {
    RatVec v(W.rs.ambient, Rat(0));
    v[i] = 1;
    v[i + 1] = -1;
    int ri = find_pos_root(W.rs, v);
    check(ri >= 0, "dn_subgroup: transposition root missing");
    out.push_back(ri);
  }
  RatVec v(W.rs.ambient, Rat(0));
  v[n - 2] = 1;
  v[n - 1] = 1;
  int ri = find_pos_root(W.rs, v);
  check(ri >= 0, "dn_subgroup: rotation root missing");
  out.push_back(ri);
  return out;
}

SubgroupView dn_subgroup(const WeylGroup& W, const GroupView& view) {
  check((W.rs.type == 'B' || W.rs.type == 'C') && W.rank >= 2, "dn_subgroup: need B_n or C_n");
  AxisInfo ai = axis_info(W);
  std::vector<int64_t> elems;
  std::vector<int> img, sign;
  for (int64_t x = 0; x < view.n; x++) {
    signed_perm_bc(W, ai, int(x), img, sign);
    int neg = 0;
    for (int s : sign)
      if (s < 0) neg++;
    if (neg % 2 == 0) elems.push_back(x);
  }
  std::vector<int64_t> gens;
  for (int ri : dn_root_indices(W)) gens.push_back(W.refl[ri]);
  return subgroup_view(view, elems, gens);
}

SubgroupView dn_cover_subgroup(const SpinCover& C, const GroupView& view) {
  const WeylGroup& W = C.W;
  check((W.rs.type == 'B' || W.rs.type == 'C') && W.rank >= 2,
        "dn_cover_subgroup: need B_n or C_n");
  AxisInfo ai = axis_info(W);
  std::vector<uint8_t> even(W.n, 0);
  std::vector<int> img, sign;
  for (int w = 0; w < W.n; w++) {
    signed_perm_bc(W, ai, w, img, sign);
    int neg = 0;
    for (int s : sign)
      if (s < 0) neg++;
    even[w] = neg % 2 == 0;
  }
  std::vector<int64_t> elems;
  for (int64_t x = 0; x < view.n; x++)
    if (even[C.wpart(x)]) elems.push_back(x);
  std::vector<int64_t> gens;
  for (int ri : dn_root_indices(W)) gens.push_back(C.lift_refl(ri));
  return subgroup_view(view, elems, gens);
}

// ---------- numeric regular-representation oracle ----------

bool numeric_table_matches(const GroupView& G, const CharTable& T) {
  check(G.n <= 200, "numeric_table_matches: group too large for the oracle");
  int n = int(G.n);
  int c = G.nc();
  auto pw = power_classes(G);
  std::vector<std::vector<int64_t>> invmem(c);
  for (int k = 0; k < c; k++)
    for (int64_t x : G.members[k]) invmem[k].push_back(G.inv(x));

  for (int attempt = 0; attempt < 8; attempt++) {
    std::mt19937 rng(12345 + attempt);
    std::uniform_int_distribution<int> dist(1, 1 << 20);
    std::vector<double> r(c);
    for (int k = 0; k < c; k++) r[k] = double(dist(rng));

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < c; k++)
      for (int64_t x : G.members[k])
        for (int h = 0; h < n; h++) M(int(G.mul(x, h)), h) += r[k];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, true);
    if (es.info() != Eigen::Success) continue;

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto ev = es.eigenvalues();
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      if (ev(a).real() != ev(b).real()) return ev(a).real() < ev(b).real();
      return ev(a).imag() < ev(b).imag();
    });
    double maxabs = 0;
    for (int i = 0; i < n; i++) maxabs = std::max(maxabs, std::abs(ev(i)));
    double tol = 1e-6 * (1 + maxabs);
    std::vector<std::vector<int>> clusters;
    for (int i = 0; i < n; i++) {
      if (!clusters.empty() && std::abs(ev(idx[i]) - ev(clusters.back()[0])) < tol)
        clusters.back().push_back(idx[i]);
      else
        clusters.push_back({idx[i]});
    }
    if (int(clusters.size()) != c) continue;

    bool bad = false;
    std::vector<std::vector<std::complex<double>>> omega(c);
    std::vector<int64_t> dims(c, 0);
    for (int ci = 0; ci < c && !bad; ci++) {
      Eigen::VectorXcd v = es.eigenvectors().col(clusters[ci][0]);
      int imax = 0;
      for (int i = 1; i < n; i++)
        if (std::abs(v(i)) > std::abs(v(imax))) imax = i;
      double vn = std::abs(v(imax));
      omega[ci].resize(c);
      for (int j = 0; j < c && !bad; j++) {
        Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n);
        for (int64_t xi : invmem[j])
          for (int g = 0; g < n; g++) w(g) += v(int(G.mul(xi, g)));
        std::complex<double> om = w(imax) / v(imax);
        double res = 0;
        for (int g = 0; g < n; g++) res = std::max(res, std::abs(w(g) - om * v(g)));
        if (res > 1e-6 * (1 + std::abs(om)) * vn * 10) bad = true;
        omega[ci][j] = om;
      }
      if (bad) break;
      std::complex<double> s = 0;
      for (int j = 0; j < c; j++)
        s += omega[ci][j] * omega[ci][G.inverse_class(j)] / double(G.class_size[j]);
      std::complex<double> dsq = double(n) / s;
      if (std::abs(dsq.imag()) > 1e-3 * (1 + std::abs(dsq))) {
        bad = true;
        break;
      }
      int64_t d = llround(std::sqrt(std::max(0.0, dsq.real())));
      if (d < 1 || std::abs(double(d) * double(d) - dsq.real()) > 1e-3 * (1 + std::abs(dsq))) {
        bad = true;
        break;
      }
      dims[ci] = d;
    }
    if (bad) continue;
    int64_t dimsq = 0;
    for (int ci = 0; ci < c; ci++) dimsq += dims[ci] * dims[ci];
    if (dimsq != G.n) continue;

    std::vector<Character> rows;
    for (int ci = 0; ci < c && !bad; ci++) {
      Character ch;
      ch.dim = dims[ci];
      ch.values.resize(c, Cyc::zero(T.exponent));
      std::vector<std::complex<double>> chi(c);
      for (int j = 0; j < c; j++)
        chi[j] = double(dims[ci]) * omega[ci][j] / double(G.class_size[j]);
      for (int k = 0; k < c && !bad; k++) {
        int o = G.class_order[k];
        std::vector<Int> mults(o);
        Int msum = 0;
        for (int t = 0; t < o && !bad; t++) {
          std::complex<double> acc = 0;
          for (int s2 = 0; s2 < o; s2++)
            acc += chi[pw[k][s2]] * std::polar(1.0, -2.0 * M_PI * s2 * t / o);
          double m = acc.real() / o;
          int64_t mr = llround(m);
          if (std::abs(acc.imag() / o) > 1e-4 || std::abs(m - double(mr)) > 1e-4 || mr < 0)
            bad = true;
          else {
            mults[t] = mr;
            msum += mr;
          }
        }
        if (bad || msum != ch.dim) {
          bad = true;
          break;
        }
        ch.values[k] = lift_from_mults(T.exponent, o, mults);
      }
      rows.push_back(std::move(ch));
    }
    if (bad) continue;

    canonical_sort_rows(*T.field, rows);
    if (int(rows.size()) != int(T.irr.size())) return false;
    for (size_t i = 0; i < rows.size(); i++) {
      if (rows[i].dim != T.irr[i].dim) return false;
      for (int k = 0; k < c; k++)
        if (!T.field->equal(rows[i].values[k], T.irr[i].values[k])) return false;
    }
    return true;
  }
  return false;
}

}  // namespace spinweyl
