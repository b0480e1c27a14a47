#include "spinweyl/nilpotent.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace spinweyl {

namespace {

std::map<int, int> multiplicities(const Partition& lam) {
  std::map<int, int> mult;
  for (int p : lam) mult[p]++;
  return mult;
}

// nonnegative half of a negation-symmetric multiset, sorted descending
std::vector<int> rank_coords(const std::vector<int>& full) {
  std::vector<int> s = full;
  std::sort(s.begin(), s.end(), std::greater<int>());
  s.resize(s.size() / 2);
  return s;
}

}  // namespace

std::string algebra_str(Algebra a, int m) {
  const char* name = a == Algebra::sl ? "sl" : a == Algebra::so ? "so" : "sp";
  return std::string(name) + "(" + std::to_string(m) + ")";
}

bool NilpotentOrbitClass::operator<(const NilpotentOrbitClass& o) const {
  if (algebra != o.algebra) return int(algebra) < int(o.algebra);
  if (m != o.m) return m < o.m;
  return partition < o.partition;
}

std::string NilpotentOrbitClass::str() const {
  return algebra_str(algebra, m) + ":" + partition_str(partition);
}

bool valid_orbit_partition(Algebra a, int m, const Partition& lam) {
  if (!is_partition(lam) || partition_weight(lam) != m) return false;
  if (a == Algebra::sl) return true;
  if (a == Algebra::sp && m % 2 != 0) return false;
  for (auto [part, mult] : multiplicities(lam)) {
    bool restricted = a == Algebra::so ? part % 2 == 0 : part % 2 == 1;
    if (restricted && mult % 2 != 0) return false;
  }
  return true;
}

NilpotentOrbitClass make_orbit(Algebra a, int m, const Partition& lam) {
  if (!valid_orbit_partition(a, m, lam))
    throw std::invalid_argument("invalid orbit partition " + partition_str(lam) +
                                " for " + algebra_str(a, m));
  NilpotentOrbitClass o;
  o.algebra = a;
  o.m = m;
  o.partition = lam;
  auto [coords, norm] = middle_element(o);
  o.h_coords = coords;
  o.h_norm_sq = norm;
  o.in_N0 = in_N0(o);
  o.distinguished = is_distinguished(o);
  return o;
}

std::vector<NilpotentOrbitClass> classify_orbits(Algebra a, int m) {
  std::vector<NilpotentOrbitClass> out;
  for (const Partition& lam : partitions(m))
    if (valid_orbit_partition(a, m, lam)) out.push_back(make_orbit(a, m, lam));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.h_norm_sq != y.h_norm_sq) return x.h_norm_sq > y.h_norm_sq;
    return x.partition > y.partition;
  });
  return out;
}

bool in_N0(const NilpotentOrbitClass& orbit) {
  auto mult = multiplicities(orbit.partition);
  if (orbit.algebra == Algebra::sl) {
    for (auto [part, k] : mult)
      if (k > 1) return false;
    return true;
  }
  int keep = orbit.algebra == Algebra::so ? 1 : 0;  // parity the parts must have
  for (auto [part, k] : mult)
    if (part % 2 != keep || k > 2) return false;
  return true;
}

bool is_distinguished(const NilpotentOrbitClass& orbit) {
  auto mult = multiplicities(orbit.partition);
  if (orbit.algebra == Algebra::sl) return orbit.partition.size() <= 1;
  int keep = orbit.algebra == Algebra::so ? 1 : 0;
  for (auto [part, k] : mult)
    if (part % 2 != keep || k > 1) return false;
  return true;
}

std::pair<std::vector<int>, Rat> middle_element(const NilpotentOrbitClass& orbit) {
  std::vector<int> coords;
  for (int part : orbit.partition)
    for (int c = part - 1; c >= 1 - part; c -= 2) coords.push_back(c);
  std::sort(coords.begin(), coords.end(), std::greater<int>());
  Rat norm = 0;
  for (int c : coords) norm += Rat(c) * Rat(c);
  if (orbit.algebra != Algebra::sl) norm /= 2;  // rank coordinates carry half
  return {coords, norm};
}

NilpotentOrbitClass orbit_from_contents(const Partition& lam, char type) {
  int n = partition_weight(lam);
  if (type == 'A') return make_orbit(Algebra::sl, n, lam);
  if (type != 'B' && type != 'C' && type != 'D')
    throw std::invalid_argument("orbit_from_contents: bad type");
  // twice the content of box (i,j) at eps = 1, 1/2, 0
  int twice_eps = type == 'B' ? 2 : type == 'C' ? 1 : 0;
  std::vector<int> want;
  for (size_t i = 0; i < lam.size(); i++)
    for (int j = 1; j <= lam[i]; j++)
      want.push_back(std::abs(2 * (j - 1 - int(i)) + twice_eps));
  std::sort(want.begin(), want.end(), std::greater<int>());
  Algebra a = type == 'C' ? Algebra::sp : Algebra::so;
  int m = type == 'B' ? 2 * n + 1 : 2 * n;
  for (const auto& cand : classify_orbits(a, m))
    if (rank_coords(cand.h_coords) == want) return cand;
  throw std::runtime_error("orbit_from_contents: no orbit matches contents of " +
                           partition_str(lam) + " in " + algebra_str(a, m));
}

std::vector<WeightedDiagram> distinguished_diagrams(const RootSystem& rs,
                                                    const std::vector<int>& nodes) {
  int r = int(nodes.size());
  // roots of the sub-diagram: positive roots supported on the chosen simples
  std::vector<int> sub;
  for (int i = 0; i < rs.num_pos(); i++) {
    bool ok = true;
    for (int j = 0; j < rs.rank && ok; j++) {
      if (rs.pos_coords[i][j] == 0) continue;
      if (std::find(nodes.begin(), nodes.end(), j) == nodes.end()) ok = false;
    }
    if (ok) sub.push_back(i);
  }
  std::vector<RatVec> croots;
  for (int j : nodes) croots.push_back(rs.coroot(rs.simple_index[j]));

  std::vector<WeightedDiagram> out;
  if (r == 0) {
    out.push_back({{}, RatVec(size_t(rs.ambient), Rat(0)), Rat(0)});
    return out;
  }
  for (int mask = 0; mask < (1 << r); mask++) {
    std::vector<int> labels(r);
    for (int k = 0; k < r; k++) labels[k] = (mask >> k) & 1 ? 2 : 0;
    // h in the span of the sub-diagram coroots; a root evaluates on h through
    // the form, so the labels prescribe form(alpha_i, h)
    RatMat M(r, r);
    RatVec b(r);
    for (int i = 0; i < r; i++) {
      const RatVec& al = rs.simple[nodes[i]];
      for (int k = 0; k < r; k++) M.at(i, k) = rs.form(al, croots[k]);
      b[i] = Rat(labels[i]);
    }
    RatVec x = solve_linear(M, b);
    RatVec h(size_t(rs.ambient), Rat(0));
    for (int k = 0; k < r; k++) h = vec_add(h, vec_scale(croots[k], x[k]));
    int deg2 = 0, deg0 = 0;
    for (int i : sub) {
      Rat v = rs.form(rs.pos[i], h);
      if (v == 2) deg2++;
      if (v == 0) deg0++;
    }
    if (deg2 != r + 2 * deg0) continue;
    out.push_back({labels, h, rs.form(h, h)});
  }
  std::sort(out.begin(), out.end(), [](const WeightedDiagram& a, const WeightedDiagram& b) {
    if (a.norm_sq != b.norm_sq) return a.norm_sq > b.norm_sq;
    return a.labels > b.labels;
  });
  return out;
}

std::vector<WeightedDiagram> distinguished_diagrams(const RootSystem& rs) {
  std::vector<int> nodes(rs.rank);
  for (int i = 0; i < rs.rank; i++) nodes[i] = i;
  return distinguished_diagrams(rs, nodes);
}

std::vector<CuspidalCase> cuspidal_cases(int pmax) {
  std::vector<CuspidalCase> out;
  char buf[64];
  for (int p = 1; p <= pmax; p++) {
    CuspidalCase a;
    a.id = "B-sp";
    a.p = p;
    std::snprintf(buf, sizeof buf, "sp(%d+2n)", p * (p + 1));
    a.host = buf;
    for (int v = 2 * p; v >= 2; v -= 2) a.cusp.push_back(v);
    a.root_type = 'B';
    a.c_long = 2;
    a.c_short = 2 * p + 1;
    out.push_back(a);

    CuspidalCase b;
    b.id = "B-so-odd";
    b.p = p;
    std::snprintf(buf, sizeof buf, "so(%d+2n)", p * p);
    b.host = buf;
    for (int v = 2 * p + 1; v >= 1; v -= 2) b.cusp.push_back(v);
    b.root_type = 'B';
    b.c_long = 2;
    b.c_short = 2 * p + 2;
    out.push_back(b);

    CuspidalCase c;
    c.id = "C-like-4n-a";
    c.p = p;
    std::snprintf(buf, sizeof buf, "so(%d+4n)", (p + 1) * (2 * p + 1));
    c.host = buf;
    for (int v = 4 * p + 1; v >= 1; v -= 4) c.cusp.push_back(v);
    c.root_type = 'B';
    c.c_long = 4;
    c.c_short = 4 * p + 3;
    out.push_back(c);

    CuspidalCase d;
    d.id = "C-like-4n-b";
    d.p = p;
    std::snprintf(buf, sizeof buf, "so(%d+4n)", (p + 1) * (2 * p + 3));
    d.host = buf;
    for (int v = 4 * p + 3; v >= 3; v -= 4) d.cusp.push_back(v);
    d.root_type = 'B';
    d.c_long = 4;
    d.c_short = 4 * p + 5;
    out.push_back(d);
  }
  CuspidalCase g;
  g.id = "G2-in-E6";
  g.host = "2A2 in E6";
  g.cusp = {3, 3};  // regular in each sl(3) factor
  g.root_type = 'G';
  g.root_rank = 2;
  g.c_long = 1;
  g.c_short = 3;
  out.push_back(g);
  CuspidalCase f;
  f.id = "F4-in-E7";
  f.host = "(3A1)' in E7";
  f.cusp = {2, 2, 2};  // regular in each sl(2) factor
  f.root_type = 'F';
  f.root_rank = 4;
  f.c_long = 1;
  f.c_short = 2;
  out.push_back(f);
  return out;
}

}  // namespace spinweyl
