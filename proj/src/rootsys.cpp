#include "spinweyl/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace spinweyl {

namespace {

RatVec unit(int ambient, int i) {
  RatVec v(ambient, Rat(0));
  v[i] = Rat(1);
  return v;
}

std::vector<RatVec> simple_roots(char type, int rank, int& ambient) {
  std::vector<RatVec> s;
  switch (type) {
    case 'A': {
      ambient = rank + 1;
      for (int i = 0; i < rank; ++i)
        s.push_back(vec_sub(unit(ambient, i), unit(ambient, i + 1)));
      break;
    }
    case 'B':
    case 'C': {
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i)
        s.push_back(vec_sub(unit(ambient, i), unit(ambient, i + 1)));
      RatVec last = unit(ambient, rank - 1);
      if (type == 'C') last = vec_scale(last, Rat(2));
      s.push_back(last);
      break;
    }
    case 'D': {
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i)
        s.push_back(vec_sub(unit(ambient, i), unit(ambient, i + 1)));
      s.push_back(vec_add(unit(ambient, rank - 2), unit(ambient, rank - 1)));
      break;
    }
    case 'G': {
      ambient = 3;
      s.push_back(vec_sub(unit(ambient, 0), unit(ambient, 1)));
      RatVec b(ambient, Rat(0));
      b[0] = Rat(-2);
      b[1] = Rat(1);
      b[2] = Rat(1);
      s.push_back(b);
      break;
    }
    case 'F': {
      ambient = 4;
      s.push_back(vec_sub(unit(ambient, 1), unit(ambient, 2)));
      s.push_back(vec_sub(unit(ambient, 2), unit(ambient, 3)));
      s.push_back(unit(ambient, 3));
      RatVec b(ambient, Rat(0));
      b[0] = Rat(1) / Rat(2);
      b[1] = Rat(-1) / Rat(2);
      b[2] = Rat(-1) / Rat(2);
      b[3] = Rat(-1) / Rat(2);
      s.push_back(b);
      break;
    }
    case 'E': {
      ambient = 8;
      RatVec a1(ambient, Rat(-1) / Rat(2));
      a1[0] = Rat(1) / Rat(2);
      a1[7] = Rat(1) / Rat(2);
      s.push_back(a1);
      s.push_back(vec_add(unit(ambient, 0), unit(ambient, 1)));
      s.push_back(vec_sub(unit(ambient, 1), unit(ambient, 0)));
      for (int i = 2; i < rank - 1; ++i)
        s.push_back(vec_sub(unit(ambient, i), unit(ambient, i - 1)));
      break;
    }
    default:
      throw invariant_error("unknown root system type");
  }
  return s;
}

void validate(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) throw invariant_error("unsupported root system " + std::string(1, type) + std::to_string(rank));
}

int expected_num_pos(char type, int rank) {
  switch (type) {
    case 'A': return rank * (rank + 1) / 2;
    case 'B':
    case 'C': return rank * rank;
    case 'D': return rank * (rank - 1);
    case 'G': return 6;
    case 'F': return 24;
    case 'E': return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
  }
  return -1;
}

}  // namespace

int RootSystem::cartan_pairing(const std::vector<int>& coords, int j) const {
  RatVec a(ambient, Rat(0));
  for (int r = 0; r < rank; ++r)
    if (coords[r] != 0) a = vec_add(a, vec_scale(simple[r], Rat(coords[r])));
  Rat p = Rat(2) * dot_std(a, simple[j]) / dot_std(simple[j], simple[j]);
  check(rat_den(p) == 1, "cartan pairing not integral");
  return (int)rat_num(p).convert_to<long long>();
}

RatVec RootSystem::coroot(int i) const {
  return vec_scale(pos[i], Rat(2) / root_norm(i));
}

Rat RootSystem::coroot_pairing(int i, int j) const {
  return form(coroot(i), coroot(j));
}

RatVec RootSystem::two_rho_check() const {
  RatVec v(ambient, Rat(0));
  for (int i = 0; i < num_pos(); ++i) v = vec_add(v, coroot(i));
  return v;
}

Rat RootSystem::two_rho_check_norm() const {
  RatVec v = two_rho_check();
  return form(v, v);
}

Int RootSystem::weyl_order() const {
  auto fact = [](int k) {
    Int f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (type) {
    case 'A': return fact(rank + 1);
    case 'B':
    case 'C': return (Int(1) << rank) * fact(rank);
    case 'D': return (Int(1) << (rank - 1)) * fact(rank);
    case 'G': return Int(12);
    case 'F': return Int(1152);
    case 'E':
      if (rank == 6) return Int(51840);
      if (rank == 7) return Int(2903040);
      return Int("696729600");
  }
  throw invariant_error("unknown type");
}

RootSystem build_root_system(char type, int rank, const Rat& t) {
  validate(type, rank);
  check(t > 0, "form scale must be positive");
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.t = t;
  rs.simple = simple_roots(type, rank, rs.ambient);

  // close the simple roots under reflections, keeping positive ones
  std::map<std::vector<int>, int> idx;
  std::vector<std::vector<int>> coords;
  std::vector<RatVec> amb;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    idx[c] = i;
    coords.push_back(c);
    amb.push_back(rs.simple[i]);
  }
  for (size_t head = 0; head < coords.size(); ++head) {
    std::vector<int> cur = coords[head];
    RatVec a = amb[head];
    for (int j = 0; j < rank; ++j) {
      Rat p = Rat(2) * dot_std(a, rs.simple[j]) / dot_std(rs.simple[j], rs.simple[j]);
      check(rat_den(p) == 1, "cartan pairing not integral");
      int nij = (int)rat_num(p).convert_to<long long>();
      if (nij == 0) continue;
      std::vector<int> c2 = cur;
      c2[j] -= nij;
      bool nonneg = std::all_of(c2.begin(), c2.end(), [](int x) { return x >= 0; });
      if (!nonneg) continue;
      if (idx.emplace(c2, (int)coords.size()).second) {
        coords.push_back(c2);
        amb.push_back(vec_sub(a, vec_scale(rs.simple[j], Rat(nij))));
      }
    }
  }
  check((int)coords.size() == expected_num_pos(type, rank), "positive root count mismatch");

  // canonical order: by height, then by simple-root coordinates
  std::vector<int> order(coords.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int hx = std::accumulate(coords[x].begin(), coords[x].end(), 0);
    int hy = std::accumulate(coords[y].begin(), coords[y].end(), 0);
    if (hx != hy) return hx < hy;
    return coords[x] < coords[y];
  });
  rs.pos_coords.resize(coords.size());
  rs.pos.resize(coords.size());
  for (size_t k = 0; k < order.size(); ++k) {
    rs.pos_coords[k] = coords[order[k]];
    rs.pos[k] = amb[order[k]];
  }
  rs.simple_index.assign(rank, -1);
  for (int k = 0; k < rs.num_pos(); ++k) {
    const auto& c = rs.pos_coords[k];
    if (std::accumulate(c.begin(), c.end(), 0) != 1) continue;
    for (int i = 0; i < rank; ++i)
      if (c[i] == 1) rs.simple_index[i] = k;
  }
  for (int i = 0; i < rank; ++i) check(rs.simple_index[i] >= 0, "missing simple root");
  return rs;
}

Int default_group_bound() { return Int(1000000); }

int WeylGroup::mult(int u, int w) const {
  for (int64_t k = word_off[w]; k < word_off[w + 1]; ++k)
    u = gen_right(u, words[(size_t)k]);
  return u;
}

int WeylGroup::element_order(int w) const {
  int k = 1, u = w;
  while (u != identity) {
    u = mult(u, w);
    ++k;
    check(k <= 2 * m + 2, "element order runaway");
  }
  return k;
}

std::vector<int> WeylGroup::word_of(int w) const {
  std::vector<int> out;
  out.reserve(length[w]);
  for (int64_t k = word_off[w]; k < word_off[w + 1]; ++k) out.push_back(words[(size_t)k]);
  return out;
}

int WeylGroup::element_from_word(const std::vector<int>& word) const {
  int u = identity;
  for (int i : word) u = gen_right(u, i);
  return u;
}

IntMat WeylGroup::matrix_of(int w) const {
  IntMat M(rank);
  for (int i = 0; i < rank; ++i) {
    int g = perm(w)[rs.simple_index[i]];
    int sgn = 1;
    if (g >= m) {
      sgn = -1;
      g -= m;
    }
    for (int r = 0; r < rank; ++r) M.at(r, i) = Int(sgn * rs.pos_coords[g][r]);
  }
  return M;
}

WeylGroup build_weyl_group(const RootSystem& rs, const Int& max_order) {
  Int bound = max_order;
  if (bound <= 0) {
    const char* e = std::getenv("SPINWEYL_MAX_GROUP_ORDER");
    bound = e ? Int(std::string(e)) : default_group_bound();
  }
  Int gorder = rs.weyl_order();
  if (gorder > bound)
    throw bound_error("group order " + int_str(gorder) + " exceeds bound " + int_str(bound) +
                      " (set SPINWEYL_MAX_GROUP_ORDER to override)");

  WeylGroup W;
  W.rs = rs;
  W.rank = rs.rank;
  W.m = rs.num_pos();
  const int m = W.m;
  const int rank = W.rank;

  // permutations of the simple reflections on the signed positive roots
  std::map<std::vector<int>, int> cmap;
  for (int r = 0; r < m; ++r) cmap[rs.pos_coords[r]] = r;
  auto signed_index = [&](std::vector<int> c) -> int {
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    if (!nonneg)
      for (int& x : c) x = -x;
    auto it = cmap.find(c);
    check(it != cmap.end(), "reflected root not in system");
    return nonneg ? it->second : it->second + m;
  };
  std::vector<std::vector<uint16_t>> genp(rank, std::vector<uint16_t>(m));
  for (int i = 0; i < rank; ++i)
    for (int r = 0; r < m; ++r) {
      int nij = rs.cartan_pairing(rs.pos_coords[r], i);
      std::vector<int> c = rs.pos_coords[r];
      c[i] -= nij;
      genp[i][r] = (uint16_t)signed_index(c);
    }

  auto apply_signed = [&](const std::vector<uint16_t>& p, int r) -> uint16_t {
    return r < m ? p[r] : (p[r - m] < m ? p[r - m] + m : p[r - m] - m);
  };

  // right-multiplication closure from the identity
  std::map<std::vector<uint16_t>, int32_t> dict;
  std::vector<std::vector<uint16_t>> queue;
  std::vector<uint16_t> id(m);
  for (int r = 0; r < m; ++r) id[r] = (uint16_t)r;
  dict.emplace(id, 0);
  queue.push_back(id);
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<uint16_t> cur = queue[head];
    for (int i = 0; i < rank; ++i) {
      std::vector<uint16_t> nxt(m);
      for (int r = 0; r < m; ++r) nxt[r] = apply_signed(cur, genp[i][r]);
      if (dict.emplace(nxt, 0).second) queue.push_back(std::move(nxt));
    }
  }
  check(Int((int64_t)dict.size()) == gorder, "group enumeration incomplete");
  W.n = (int64_t)dict.size();
  queue.clear();
  queue.shrink_to_fit();

  // canonical element order = lexicographic order of the permutations
  W.perms.resize((size_t)W.n * m);
  {
    int32_t k = 0;
    for (auto& kv : dict) {
      kv.second = k;
      std::copy(kv.first.begin(), kv.first.end(), W.perms.begin() + (size_t)k * m);
      ++k;
    }
  }
  auto lookup = [&](const std::vector<uint16_t>& p) -> int32_t {
    auto it = dict.find(p);
    check(it != dict.end(), "element lookup failed");
    return it->second;
  };
  W.identity = lookup(id);

  W.rcay.resize((size_t)W.n * rank);
  W.length.resize(W.n);
  W.invidx.resize(W.n);
  std::vector<uint16_t> tmp(m);
  for (int64_t w = 0; w < W.n; ++w) {
    const uint16_t* p = W.perm((int)w);
    int len = 0;
    for (int r = 0; r < m; ++r)
      if (p[r] >= m) ++len;
    W.length[w] = len;
    for (int i = 0; i < rank; ++i) {
      for (int r = 0; r < m; ++r) {
        int g = genp[i][r];
        tmp[r] = g < m ? p[g] : (p[g - m] < m ? p[g - m] + m : p[g - m] - m);
      }
      W.rcay[(size_t)w * rank + i] = lookup(tmp);
    }
    for (int r = 0; r < m; ++r) {
      int g = p[r];
      if (g < m)
        tmp[g] = (uint16_t)r;
      else
        tmp[g - m] = (uint16_t)(r + m);
    }
    W.invidx[w] = lookup(tmp);
  }
  dict.clear();

  // canonical reduced words: repeatedly strip the smallest left descent
  W.word_off.resize(W.n + 1);
  W.word_off[0] = 0;
  for (int64_t w = 0; w < W.n; ++w) W.word_off[w + 1] = W.word_off[w] + W.length[w];
  W.words.resize((size_t)W.word_off[W.n]);
  for (int64_t w = 0; w < W.n; ++w) {
    int u = (int)w;
    int64_t k = W.word_off[w];
    while (u != W.identity) {
      int j = W.invidx[u];
      int i = 0;
      for (; i < rank; ++i)
        if (W.length[W.rcay[(size_t)j * rank + i]] < W.length[j]) break;
      check(i < rank, "no left descent for non-identity element");
      W.words[(size_t)k++] = (uint8_t)i;
      u = W.invidx[W.rcay[(size_t)j * rank + i]];
    }
    check(k == W.word_off[w + 1], "word length mismatch");
  }

  // reflections attached to the positive roots
  W.refl.resize(m);
  for (int a = 0; a < m; ++a) {
    for (int r = 0; r < m; ++r) {
      Rat p = Rat(2) * dot_std(rs.pos[r], rs.pos[a]) / dot_std(rs.pos[a], rs.pos[a]);
      check(rat_den(p) == 1, "coroot pairing not integral");
      long long c = rat_num(p).convert_to<long long>();
      std::vector<int> cc = rs.pos_coords[r];
      for (int q = 0; q < rank; ++q) cc[q] -= (int)c * rs.pos_coords[a][q];
      tmp[r] = (uint16_t)signed_index(cc);
    }
    // rebuild lookup: dict was cleared, so search the sorted permutation table
    int32_t lo = 0, hi = (int32_t)W.n;
    while (lo < hi) {
      int32_t mid = lo + (hi - lo) / 2;
      const uint16_t* p = W.perm(mid);
      if (std::lexicographical_compare(p, p + m, tmp.data(), tmp.data() + m))
        lo = mid + 1;
      else
        hi = mid;
    }
    check(lo < W.n && std::equal(tmp.begin(), tmp.end(), W.perm(lo)), "reflection not found");
    W.refl[a] = lo;
  }

  // conjugacy classes by closure under conjugation with the generators
  W.class_of.assign(W.n, -1);
  std::vector<ConjClass> cls;
  for (int64_t w = 0; w < W.n; ++w) {
    if (W.class_of[w] >= 0) continue;
    int id_cls = (int)cls.size();
    std::vector<int> stack{(int)w};
    W.class_of[w] = id_cls;
    int64_t size = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++size;
      for (int i = 0; i < rank; ++i) {
        int v = W.conj_by_gen(u, i);
        if (W.class_of[v] < 0) {
          W.class_of[v] = id_cls;
          stack.push_back(v);
        }
      }
    }
    ConjClass c;
    c.rep = (int)w;
    c.size = size;
    cls.push_back(c);
  }
  for (auto& c : cls) {
    c.order = W.element_order(c.rep);
    c.charpoly = char_poly(W.matrix_of(c.rep));
    c.elliptic = det_one_minus(c.charpoly) != 0;
  }
  std::vector<int> corder(cls.size());
  std::iota(corder.begin(), corder.end(), 0);
  std::sort(corder.begin(), corder.end(), [&](int x, int y) {
    if (cls[x].order != cls[y].order) return cls[x].order < cls[y].order;
    if (cls[x].size != cls[y].size) return cls[x].size < cls[y].size;
    if (cls[x].charpoly != cls[y].charpoly) return cls[x].charpoly < cls[y].charpoly;
    return cls[x].rep < cls[y].rep;
  });
  std::vector<int> rank_of(cls.size());
  for (size_t k = 0; k < corder.size(); ++k) rank_of[corder[k]] = (int)k;
  W.classes.resize(cls.size());
  for (size_t k = 0; k < corder.size(); ++k) W.classes[k] = cls[corder[k]];
  for (int64_t w = 0; w < W.n; ++w) W.class_of[w] = rank_of[W.class_of[w]];

  int64_t total = 0;
  for (const auto& c : W.classes) total += c.size;
  check(total == W.n, "class sizes do not sum to the group order");
  return W;
}

}  // namespace spinweyl
