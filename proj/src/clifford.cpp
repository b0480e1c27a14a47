#include "spinweyl/clifford.hpp"

#include <bit>

namespace spinweyl {

RatVec OrthoBasis::coords(const RatVec& v) const {
  RatVec out(k(), Rat(0));
  for (int i = 0; i < k(); ++i) out[i] = dot_std(v, o[i]) / gstd[i];
  RatVec back(v.size(), Rat(0));
  for (int i = 0; i < k(); ++i) back = vec_add(back, vec_scale(o[i], out[i]));
  check(back == v, "vector outside the span of the basis");
  return out;
}

OrthoBasis build_ortho_basis(const RootSystem& rs) {
  OrthoBasis ob;
  ob.t = rs.t;
  gram_schmidt(rs.simple, ob.o, ob.gstd);
  ob.d.resize(ob.o.size());
  for (size_t i = 0; i < ob.o.size(); ++i) {
    check(ob.gstd[i] > 0, "degenerate basis vector");
    ob.d[i] = rs.t * ob.gstd[i];
  }
  // simple-root coordinates of each o_j via the normal equations (the
  // simples are independent, so the Gram matrix is invertible)
  int k = ob.k();
  RatMat G(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) G.at(a, b) = dot_std(rs.simple[a], rs.simple[b]);
  ob.simple_coords = RatMat(k, k);
  for (int j = 0; j < k; ++j) {
    RatVec rhs(k, Rat(0));
    for (int a = 0; a < k; ++a) rhs[a] = dot_std(rs.simple[a], ob.o[j]);
    RatVec x = solve_linear(G, rhs);
    for (int a = 0; a < k; ++a) ob.simple_coords.at(a, j) = x[a];
  }
  return ob;
}

CliffElem CliffordAlg::scalar(const Rat& r) {
  CliffElem x;
  if (r != 0) x.c[0] = r;
  return x;
}

CliffElem CliffordAlg::vector_elem(const RatVec& coords) const {
  check((int)coords.size() == k, "coordinate size mismatch");
  CliffElem x;
  for (int i = 0; i < k; ++i)
    if (coords[i] != 0) x.c[uint32_t(1) << i] = coords[i];
  return x;
}

CliffElem CliffordAlg::add(const CliffElem& x, const CliffElem& y) {
  CliffElem r = x;
  for (const auto& [m, v] : y.c) {
    Rat s = (r.c.count(m) ? r.c[m] : Rat(0)) + v;
    if (s == 0)
      r.c.erase(m);
    else
      r.c[m] = s;
  }
  return r;
}

CliffElem CliffordAlg::sub(const CliffElem& x, const CliffElem& y) { return add(x, neg(y)); }

CliffElem CliffordAlg::neg(const CliffElem& x) {
  CliffElem r = x;
  for (auto& [m, v] : r.c) v = -v;
  return r;
}

CliffElem CliffordAlg::scale(const CliffElem& x, const Rat& s) {
  if (s == 0) return CliffElem{};
  CliffElem r = x;
  for (auto& [m, v] : r.c) v = v * s;
  return r;
}

CliffElem CliffordAlg::mul(const CliffElem& x, const CliffElem& y) const {
  CliffElem r;
  for (const auto& [ma, va] : x.c) {
    for (const auto& [mb, vb] : y.c) {
      uint32_t a = ma;
      int sgn = 1;
      Rat factor = va * vb;
      for (int j = 0; j < k; ++j) {
        uint32_t bit = uint32_t(1) << j;
        if (!(mb & bit)) continue;
        if (std::popcount(a >> (j + 1)) & 1) sgn = -sgn;
        if (a & bit) {
          factor *= d[j];
          a &= ~bit;
        } else {
          a |= bit;
        }
      }
      if (sgn < 0) factor = -factor;
      if (factor == 0) continue;
      Rat s = (r.c.count(a) ? r.c[a] : Rat(0)) + factor;
      if (s == 0)
        r.c.erase(a);
      else
        r.c[a] = s;
    }
  }
  return r;
}

CliffElem CliffordAlg::reverse(const CliffElem& x) {
  CliffElem r = x;
  for (auto& [m, v] : r.c) {
    int g = std::popcount(m);
    if ((g * (g - 1) / 2) & 1) v = -v;
  }
  return r;
}

CliffElem CliffordAlg::grade_invol(const CliffElem& x) {
  CliffElem r = x;
  for (auto& [m, v] : r.c)
    if (std::popcount(m) & 1) v = -v;
  return r;
}

bool CliffordAlg::is_scalar(const CliffElem& x) {
  return x.c.empty() || (x.c.size() == 1 && x.c.begin()->first == 0);
}

Rat CliffordAlg::scalar_part(const CliffElem& x) {
  auto it = x.c.find(0);
  return it == x.c.end() ? Rat(0) : it->second;
}

bool CliffordAlg::is_homogeneous_parity(const CliffElem& x, int& parity) {
  if (x.c.empty()) {
    parity = 0;
    return true;
  }
  parity = std::popcount(x.c.begin()->first) & 1;
  for (const auto& [m, v] : x.c)
    if ((std::popcount(m) & 1) != parity) return false;
  return true;
}

CliffElem CliffordAlg::primitivize(const CliffElem& x) {
  check(!x.is_zero(), "primitivize of zero");
  Int g(0), l(1);
  for (const auto& [m, v] : x.c) {
    g = int_gcd(g, rat_num(v) < 0 ? Int(-rat_num(v)) : rat_num(v));
    l = int_lcm(l, rat_den(v));
  }
  Rat factor = Rat(l) / Rat(g);
  CliffElem r = x;
  for (auto& [m, v] : r.c) v = v * factor;
  return r;
}

RatMat CliffordAlg::vector_action(const CliffElem& a) const {
  int parity = 0;
  check(is_homogeneous_parity(a, parity), "versor must have homogeneous parity");
  CliffElem rev = reverse(a);
  CliffElem norm = mul(a, rev);
  check(is_scalar(norm), "not a versor: a rev(a) is not scalar");
  Rat nr = scalar_part(norm);
  check(nr != 0, "versor is not invertible");
  RatMat M(k, k);
  for (int j = 0; j < k; ++j) {
    RatVec ej(k, Rat(0));
    ej[j] = Rat(1);
    CliffElem img = mul(mul(a, vector_elem(ej)), rev);
    if (parity) img = neg(img);
    for (const auto& [m, v] : img.c) {
      check(std::popcount(m) == 1, "twisted conjugation left the grade-1 space");
      int i = std::countr_zero(m);
      M.at(i, j) = v / nr;
    }
  }
  return M;
}

CliffordAlg algebra_of(const OrthoBasis& ob) {
  CliffordAlg A;
  A.k = ob.k();
  A.d = ob.d;
  return A;
}

QuadC spin_trace_raw(const CliffordAlg& A, const CliffElem& x, int half_sign) {
  int m = A.k / 2;
  Rat dim = Rat(Int(1) << m);
  QuadC out(Quad(CliffordAlg::scalar_part(x) * dim));
  if (A.k % 2 == 1) {
    uint32_t full = (uint32_t(1) << A.k) - 1;
    auto it = x.c.find(full);
    if (it != x.c.end()) {
      Rat D(1);
      for (const Rat& di : A.d) D *= di;
      // contribution: coeff * dim * half_sign * (-i)^m * sqrt(D), where a
      // negative D adds one more factor of i
      int ipow = (3 * m) % 4;
      if (D < 0) {
        D = -D;
        ipow = (ipow + 1) % 4;
      }
      Quad rootD;
      check(quad_sqrt_of_rat(D, rootD), "top-blade norm outside the quadratic tower");
      Quad mag = rootD.scaled(it->second * dim * Rat(half_sign));
      switch (ipow) {
        case 0: out = out + QuadC(mag); break;
        case 1: out = out + QuadC(Quad(), mag); break;
        case 2: out = out - QuadC(mag); break;
        case 3: out = out + QuadC(Quad(), -mag); break;
      }
    }
  }
  return out;
}

GammaModel build_gamma_model(const std::vector<Rat>& d, int half_sign) {
  using Mat = Eigen::MatrixXcd;
  const std::complex<double> I(0, 1);
  GammaModel G;
  G.k = (int)d.size();
  G.half_sign = half_sign;
  int m = G.k / 2;
  G.dim = 1 << m;
  Mat sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -I, I, 0;
  sz << 1, 0, 0, -1;
  auto slot = [&](const Mat& op, int pos) {
    Mat r = Mat::Identity(1, 1);
    for (int j = 0; j < m; ++j) {
      const Mat& f = j < pos ? sz : (j == pos ? op : Mat::Identity(2, 2));
      Mat nr(r.rows() * f.rows(), r.cols() * f.cols());
      for (int a = 0; a < r.rows(); ++a)
        for (int b = 0; b < r.cols(); ++b)
          nr.block(a * f.rows(), b * f.cols(), f.rows(), f.cols()) = r(a, b) * f;
      r = nr;
    }
    return r;
  };
  std::vector<Mat> gam;
  for (int j = 0; j < m; ++j) {
    gam.push_back(slot(sx, j));
    gam.push_back(slot(sy, j));
  }
  if (G.k % 2 == 1) {
    Mat top = Mat::Identity(G.dim, G.dim);
    for (int j = 0; j < 2 * m; ++j) top = top * gam[j];
    top *= std::pow(I, m) * double(half_sign);
    gam.push_back(top);
  }
  for (int j = 0; j < G.k; ++j)
    G.e.push_back(std::sqrt(std::complex<double>(rat_double(d[j]), 0)) * gam[j]);
  return G;
}

Eigen::MatrixXcd gamma_rep(const GammaModel& G, const CliffElem& x) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(G.dim, G.dim);
  for (const auto& [m, v] : x.c) {
    Eigen::MatrixXcd blade = Eigen::MatrixXcd::Identity(G.dim, G.dim);
    for (int j = 0; j < G.k; ++j)
      if (m & (uint32_t(1) << j)) blade = blade * G.e[j];
    out += rat_double(v) * blade;
  }
  return out;
}

}  // namespace spinweyl
