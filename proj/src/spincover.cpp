#include "spinweyl/spincover.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace spinweyl {

int64_t SpinCover::mult(int64_t x, int64_t y) const {
  int u = wpart(x);
  int v = wpart(y);
  int sign = (int)((x ^ y) & 1);
  for (int64_t k = W.word_off[v]; k < W.word_off[v + 1]; ++k) {
    int i = W.words[(size_t)k];
    sign ^= right_sign[(size_t)u * W.rank + i];
    u = W.gen_right(u, i);
  }
  return 2 * (int64_t)u + sign;
}

int64_t SpinCover::inverse(int64_t x) const {
  int wi = W.invidx[wpart(x)];
  int64_t probe = mult(2 * (int64_t)wi + (x & 1), x);
  check(wpart(probe) == W.identity, "inverse image mismatch");
  return 2 * (int64_t)wi + ((x & 1) ^ (probe & 1));
}

int SpinCover::order_of(int64_t x) const {
  int k = 1;
  int64_t u = x;
  while (u != id) {
    u = mult(u, x);
    ++k;
    check(k <= 4 * W.m + 4, "cover element order runaway");
  }
  return k;
}

int64_t SpinCover::power(int64_t x, int64_t e) const {
  int64_t r = id;
  for (int64_t s = 0; s < e; ++s) r = mult(r, x);
  return r;
}

int64_t SpinCover::lift_gen(int i) const {
  return 2 * (int64_t)W.gen_right(W.identity, i);
}

int64_t SpinCover::lift_refl(int posroot) const {
  return 2 * (int64_t)W.refl[posroot] + refl_sign[posroot];
}

CliffElem SpinCover::lift_elem(int w) const {
  CliffElem L = CliffordAlg::scalar(Rat(1));
  for (int64_t k = W.word_off[w]; k < W.word_off[w + 1]; ++k) {
    int i = W.words[(size_t)k];
    L = CliffordAlg::primitivize(alg.mul(L, alg.vector_elem(ob.coords(W.rs.simple[i]))));
  }
  return L;
}

QuadC SpinCover::spin_char_value(int64_t x, int half_sign) const {
  CliffElem L = lift_elem(wpart(x));
  CliffElem nrm = alg.mul(L, CliffordAlg::reverse(L));
  check(CliffordAlg::is_scalar(nrm), "lift is not a versor");
  Rat r = CliffordAlg::scalar_part(nrm);
  if (r < 0) r = -r;
  Quad c;
  check(quad_sqrt_of_rat(r, c), "lift norm outside the quadratic tower");
  QuadC tr = spin_trace_raw(alg, L, half_sign);
  Quad inv = quad_inv(c);
  QuadC val(tr.re * inv, tr.im * inv);
  if (x & 1) val = QuadC(Quad(), Quad()) - val;
  return val;
}

SpinCover build_spin_cover(WeylGroup Win) {
  SpinCover C;
  C.W = std::move(Win);
  const WeylGroup& W = C.W;
  C.ob = build_ortho_basis(W.rs);
  C.alg.k = C.ob.k();
  C.alg.d.resize(C.alg.k);
  for (int i = 0; i < C.alg.k; ++i) C.alg.d[i] = -C.ob.d[i];
  C.N = 2 * W.n;
  C.id = 2 * (int64_t)W.identity;
  C.z = C.id + 1;

  std::vector<CliffElem> gen(W.rank);
  for (int i = 0; i < W.rank; ++i)
    gen[i] = CliffordAlg::primitivize(C.alg.vector_elem(C.ob.coords(W.rs.simple[i])));

  // canonical lifts layer by layer; only adjacent layers kept.  The sign
  // table is filled on edges that raise the length and mirrored downward:
  // multiplying L(w) f_i = sign * (positive) * L(w s_i) by f_i again
  // introduces the scalar f_i^2 = d_i < 0, so the reverse edge flips sign.
  std::vector<std::vector<int>> by_len(W.m + 1);
  for (int w = 0; w < W.n; ++w) by_len[W.length[w]].push_back(w);
  C.right_sign.assign((size_t)W.n * W.rank, 0);
  std::map<int, CliffElem> prev, cur;
  prev[W.identity] = CliffordAlg::scalar(Rat(1));
  for (int len = 1; len <= W.m; ++len) {
    cur.clear();
    for (int w : by_len[len]) {
      int i1 = W.words[(size_t)W.word_off[w]];
      int wp = W.gen_left(w, i1);
      auto it = prev.find(wp);
      check(it != prev.end(), "missing lift in the previous layer");
      cur[w] = CliffordAlg::primitivize(C.alg.mul(gen[i1], it->second));
    }
    for (const auto& [w, L] : prev) {
      for (int i = 0; i < W.rank; ++i) {
        int v = W.gen_right(w, i);
        if (W.length[v] != len) continue;
        CliffElem P = CliffordAlg::primitivize(C.alg.mul(L, gen[i]));
        const CliffElem& Lv = cur.at(v);
        uint8_t s;
        if (P == Lv)
          s = 0;
        else {
          check(P == CliffordAlg::neg(Lv), "lift comparison failed");
          s = 1;
        }
        C.right_sign[(size_t)w * W.rank + i] = s;
        // going back down: L(v) f_i = d_i L(w) * (positive), and d_i < 0
        C.right_sign[(size_t)v * W.rank + i] = s ^ 1;
      }
    }
    std::swap(prev, cur);
  }
  // generator squares: s~_i^2 = z
  for (int i = 0; i < W.rank; ++i) {
    int gi = W.gen_right(W.identity, i);
    check(C.right_sign[(size_t)gi * W.rank + i] == 1, "generator lift must square to z");
    check(C.right_sign[(size_t)W.identity * W.rank + i] == 0, "identity edge sign");
  }

  // positive lifts of all root reflections
  C.refl_sign.assign(W.m, 0);
  for (int a = 0; a < W.m; ++a) {
    CliffElem x = CliffordAlg::primitivize(C.alg.vector_elem(C.ob.coords(W.rs.pos[a])));
    CliffElem L = C.lift_elem(W.refl[a]);
    if (x == L)
      C.refl_sign[a] = 0;
    else {
      check(x == CliffordAlg::neg(L), "root vector does not match the reflection lift");
      C.refl_sign[a] = 1;
    }
  }

  // conjugacy classes of the cover
  C.class_of.assign((size_t)C.N, -1);
  std::vector<CoverClass> cls;
  std::vector<int64_t> glifts(W.rank);
  for (int i = 0; i < W.rank; ++i) glifts[i] = C.lift_gen(i);
  for (int64_t x = 0; x < C.N; ++x) {
    if (C.class_of[(size_t)x] >= 0) continue;
    int idc = (int)cls.size();
    std::vector<int64_t> stack{x};
    C.class_of[(size_t)x] = idc;
    int64_t size = 0;
    while (!stack.empty()) {
      int64_t u = stack.back();
      stack.pop_back();
      ++size;
      for (int i = 0; i < W.rank; ++i) {
        // conjugation by the generator lift: g u g^{-1} with g^{-1} = z g
        int64_t v = C.negate(C.mult(C.mult(glifts[i], u), glifts[i]));
        if (C.class_of[(size_t)v] < 0) {
          C.class_of[(size_t)v] = idc;
          stack.push_back(v);
        }
      }
    }
    CoverClass cc;
    cc.rep = x;
    cc.size = size;
    cls.push_back(cc);
  }
  for (auto& cc : cls) {
    cc.order = C.order_of(cc.rep);
    cc.wclass = W.class_of[C.wpart(cc.rep)];
  }
  std::vector<int> order(cls.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cls[a].wclass != cls[b].wclass) return cls[a].wclass < cls[b].wclass;
    if (cls[a].order != cls[b].order) return cls[a].order < cls[b].order;
    return cls[a].rep < cls[b].rep;
  });
  std::vector<int> rank_of(cls.size());
  for (size_t k = 0; k < order.size(); ++k) rank_of[order[k]] = (int)k;
  C.classes.resize(cls.size());
  for (size_t k = 0; k < order.size(); ++k) C.classes[k] = cls[order[k]];
  for (int64_t x = 0; x < C.N; ++x) C.class_of[(size_t)x] = rank_of[C.class_of[(size_t)x]];

  C.wclass_split.assign(W.classes.size(), 0);
  for (size_t c = 0; c < W.classes.size(); ++c) {
    int w = W.classes[c].rep;
    C.wclass_split[c] = C.class_of[2 * (size_t)w] != C.class_of[2 * (size_t)w + 1] ? 1 : 0;
  }

  int64_t total = 0;
  for (const auto& cc : C.classes) total += cc.size;
  check(total == C.N, "cover class sizes do not sum to the cover order");
  return C;
}

std::vector<Rat> parameter_by_length(const RootSystem& rs, const Rat& c_long,
                                     const Rat& c_short) {
  Rat longest = rs.root_norm(0);
  for (int i = 1; i < rs.num_pos(); ++i) longest = std::max(longest, rs.root_norm(i));
  std::vector<Rat> c(rs.pos.size());
  for (int i = 0; i < rs.num_pos(); ++i)
    c[(size_t)i] = rs.root_norm(i) == longest ? c_long : c_short;
  return c;
}

CasimirElement casimir_element(const SpinCover& C, const std::vector<Rat>& cvals) {
  const WeylGroup& W = C.W;
  const RootSystem& rs = W.rs;
  int m = W.m;
  check((int)cvals.size() == m, "casimir: need one c value per positive root");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (rs.root_norm(a) == rs.root_norm(b))
        check(cvals[(size_t)a] == cvals[(size_t)b], "casimir: c is not W-invariant");

  std::vector<Quad> croot_len(m);  // |coroot|, a square root of a rational
  for (int i = 0; i < m; ++i) {
    Quad q;
    check(quad_sqrt_of_rat(rs.coroot_pairing(i, i), q),
          "casimir: coroot length outside the quadratic tower");
    croot_len[(size_t)i] = q;
  }

  std::map<int64_t, Quad> on_elem;
  size_t nc = C.classes.size();
  std::vector<Quad> w1(nc), w2(nc);
  for (int a = 0; a < m; ++a) {
    int ra = W.refl[(size_t)a];
    int64_t la = C.lift_refl(a);
    for (int b = 0; b < m; ++b) {
      Rat ab = rs.form(rs.pos[(size_t)a], rs.pos[(size_t)b]);
      bool neg = W.root_image(ra, b) >= (uint16_t)m;
      if (!neg && ab == 0) continue;
      Quad coef = croot_len[(size_t)a] * croot_len[(size_t)b] *
                  Quad(cvals[(size_t)a] * cvals[(size_t)b]);
      int64_t x = C.mult(la, C.lift_refl(b));
      int k = C.class_of[(size_t)x];
      if (neg) {
        w1[(size_t)k] = w1[(size_t)k] + coef;
        on_elem[x] = on_elem[x] + coef;
      }
      if (ab != 0) w2[(size_t)k] = w2[(size_t)k] + (ab > 0 ? coef : -coef);
    }
  }
  for (size_t k = 0; k < nc; ++k)
    check(w1[k] == w2[k], "casimir: the two pair sums disagree on a class");

  // centrality: within each touched class every element carries equal weight
  for (size_t k = 0; k < nc; ++k) {
    if (w1[k] == Quad(Rat(0))) continue;
    int64_t rep = C.classes[k].rep;
    // walk the class by generator conjugation
    std::vector<int64_t> orbit{rep};
    std::map<int64_t, bool> seen{{rep, true}};
    for (size_t q = 0; q < orbit.size(); ++q)
      for (int i = 0; i < W.rank; ++i) {
        int64_t g = C.lift_gen(i);
        int64_t y = C.mult(C.mult(g, orbit[q]), C.inverse(g));
        if (!seen.count(y)) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    Quad per = on_elem.count(rep) ? on_elem[rep] : Quad(Rat(0));
    for (int64_t y : orbit) {
      Quad wy = on_elem.count(y) ? on_elem[y] : Quad(Rat(0));
      check(wy == per, "casimir: weight not constant on a class");
    }
  }

  RatVec rho_c(rs.pos[0].size(), Rat(0));
  for (int a = 0; a < m; ++a)
    rho_c = vec_add(rho_c, vec_scale(rs.coroot(a), cvals[(size_t)a]));
  CasimirElement om;
  om.weight = std::move(w1);
  om.spin_scalar = rs.form(rho_c, rho_c);
  return om;
}

CasimirElement casimir_element(const SpinCover& C, const Rat& c) {
  return casimir_element(C, std::vector<Rat>((size_t)C.W.m, c));
}

}  // namespace spinweyl
