#include "spinweyl/linalg.hpp"

namespace spinweyl {

Rat dot_std(const RatVec& u, const RatVec& v) {
  check(u.size() == v.size(), "dot_std: size mismatch");
  Rat s(0);
  for (size_t i = 0; i < u.size(); i++) s += u[i] * v[i];
  return s;
}

RatVec vec_add(const RatVec& u, const RatVec& v) {
  RatVec w(u);
  for (size_t i = 0; i < u.size(); i++) w[i] += v[i];
  return w;
}

RatVec vec_sub(const RatVec& u, const RatVec& v) {
  RatVec w(u);
  for (size_t i = 0; i < u.size(); i++) w[i] -= v[i];
  return w;
}

RatVec vec_scale(const RatVec& u, const Rat& s) {
  RatVec w(u);
  for (auto& x : w) x *= s;
  return w;
}

bool vec_is_zero(const RatVec& u) {
  for (auto& x : u)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::mul(const RatMat& o) const {
  check(cols == o.rows, "RatMat::mul: shape mismatch");
  RatMat r(rows, o.cols);
  for (int i = 0; i < rows; i++)
    for (int k = 0; k < cols; k++) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols; j++) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

RatVec RatMat::apply(const RatVec& v) const {
  check(int(v.size()) == cols, "RatMat::apply: size mismatch");
  RatVec r(rows, Rat(0));
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

RatVec solve_linear(RatMat M, RatVec b) {
  check(M.rows == int(b.size()), "solve_linear: size mismatch");
  int n = M.rows, m = M.cols;
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < m && row < n; col++) {
    int p = -1;
    for (int i = row; i < n; i++)
      if (M.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m; j++) std::swap(M.at(p, j), M.at(row, j));
    std::swap(b[p], b[row]);
    Rat inv = Rat(1) / M.at(row, col);
    for (int j = 0; j < m; j++) M.at(row, j) *= inv;
    b[row] *= inv;
    for (int i = 0; i < n; i++) {
      if (i == row) continue;
      Rat f = M.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < m; j++) M.at(i, j) -= f * M.at(row, j);
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    row++;
  }
  for (int i = row; i < n; i++) check(b[i] == 0, "solve_linear: inconsistent system");
  check(int(pivot_col.size()) == m, "solve_linear: underdetermined system");
  RatVec x(m, Rat(0));
  for (int i = 0; i < m; i++) x[pivot_col[i]] = b[i];
  return x;
}

IntMat IntMat::mul(const IntMat& o) const {
  check(n == o.n, "IntMat::mul: size mismatch");
  IntMat r(n);
  for (int i = 0; i < n; i++)
    for (int k = 0; k < n; k++) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; j++) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

Int IntMat::trace() const {
  Int t(0);
  for (int i = 0; i < n; i++) t += at(i, i);
  return t;
}

std::vector<Int> char_poly(const IntMat& A) {
  int n = A.n;
  std::vector<Int> c(n + 1);
  c[0] = 1;
  IntMat M(n);  // M_0 = 0
  for (int k = 1; k <= n; k++) {
    // M_k = A M_{k-1} + c_{k-1} I
    IntMat N = A.mul(M);
    for (int i = 0; i < n; i++) N.at(i, i) += c[k - 1];
    Int t = A.mul(N).trace();
    check(t % k == 0, "char_poly: non-integer coefficient");
    c[k] = -t / k;
    M = std::move(N);
  }
  return c;
}

Int det_one_minus(const std::vector<Int>& cp) {
  Int s(0);
  for (const auto& c : cp) s += c;
  return s;
}

Int det_one_plus(const std::vector<Int>& cp) {
  // det(I + A) = (-1)^n p(-1) = sum_k (-1)^k c_k
  int n = int(cp.size()) - 1;
  Int s(0);
  for (int k = 0; k <= n; k++) {
    if (k % 2 == 0)
      s += cp[k];
    else
      s -= cp[k];
  }
  return s;
}

Int wedge_trace(const std::vector<Int>& cp, int k) {
  check(k >= 0 && k < int(cp.size()), "wedge_trace: bad index");
  return (k % 2 == 0) ? cp[k] : -cp[k];
}

void gram_schmidt(const std::vector<RatVec>& in, std::vector<RatVec>& out,
                  std::vector<Rat>& sqnorm) {
  out.clear();
  sqnorm.clear();
  for (const auto& v : in) {
    RatVec w = v;
    for (size_t j = 0; j < out.size(); j++) {
      Rat coef = dot_std(w, out[j]) / sqnorm[j];
      if (coef != 0) w = vec_sub(w, vec_scale(out[j], coef));
    }
    Rat ns = dot_std(w, w);
    check(ns != 0, "gram_schmidt: dependent input");
    out.push_back(std::move(w));
    sqnorm.push_back(std::move(ns));
  }
}

}  // namespace spinweyl
