#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "spinweyl/grouprep.hpp"
#include "spinweyl/rootsys.hpp"
#include "spinweyl/spincover.hpp"

using namespace spinweyl;

namespace {

struct Ctx {
  WeylGroup W;
  SpinCover C;
  GroupView VW, VC;
  CharTable TW, TC;
};

Ctx& ctx(char tp, int rank) {
  static std::map<std::pair<char, int>, std::unique_ptr<Ctx>> cache;
  auto key = std::make_pair(tp, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto c = std::make_unique<Ctx>();
  c->W = build_weyl_group(build_root_system(tp, rank));
  c->C = build_spin_cover(c->W);
  c->VW = group_view(c->W);
  c->VC = group_view(c->C);
  c->TW = character_table(c->VW);
  c->TC = character_table(c->VC);
  return *cache.emplace(key, std::move(c)).first->second;
}

// independent oracle for symmetric group characters: border strip removal on
// beta numbers, sign = parity of beads crossed
std::vector<int> to_beta(const Partition& lam) {
  int l = int(lam.size());
  std::vector<int> b(l);
  for (int i = 0; i < l; i++) b[i] = lam[i] + (l - 1 - i);
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  Partition out;
  int l = int(b.size());
  for (int i = 0; i < l; i++) {
    int part = b[i] - (l - 1 - i);
    if (part <= 0) break;
    out.push_back(part);
  }
  return out;
}

Int mn_rec(const Partition& lam, const Partition& mu, size_t mi,
           std::map<std::pair<Partition, size_t>, Int>& memo) {
  if (mi == mu.size()) return lam.empty() ? Int(1) : Int(0);
  auto key = std::make_pair(lam, mi);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int t = mu[mi];
  std::vector<int> beta = to_beta(lam);
  Int total = 0;
  for (size_t j = 0; j < beta.size(); j++) {
    int b2 = beta[j] - t;
    if (b2 < 0) continue;
    bool occupied = false;
    int crossed = 0;
    for (size_t k = 0; k < beta.size(); k++) {
      if (k == j) continue;
      if (beta[k] == b2) occupied = true;
      if (beta[k] > b2 && beta[k] < beta[j]) crossed++;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[j] = b2;
    Int sub = mn_rec(from_beta(nb), mu, mi + 1, memo);
    if (crossed % 2 == 1) sub = -sub;
    total += sub;
  }
  memo[key] = total;
  return total;
}

Int mn_value(const Partition& lam, const Partition& mu) {
  std::map<std::pair<Partition, size_t>, Int> memo;
  return mn_rec(lam, mu, 0, memo);
}

ClassFn all_ones(const CharTable& T) {
  return rational_fn(T, std::vector<Rat>(T.nc(), Rat(1)));
}

int row_of_values(const CharTable& T, const std::vector<Rat>& vals) {
  return T.find_row(rational_fn(T, vals));
}

}  // namespace

TEST_CASE("symmetric group tables match the border strip recursion") {
  for (int n = 0; n <= 8; n++) {
    SnTable S = sn_character_table(n);
    auto ps = partitions(n);
    CHECK(S.rows.size() == ps.size());
    Int nf = 1;
    for (int i = 2; i <= n; i++) nf *= i;
    Int dimsq = 0, szsum = 0;
    for (size_t k = 0; k < S.classes.size(); k++) szsum += S.class_size[k];
    CHECK(szsum == nf);
    for (size_t i = 0; i < S.labels.size(); i++) {
      for (size_t k = 0; k < S.classes.size(); k++)
        CHECK(S.rows[i][k] == mn_value(S.labels[i], S.classes[k]));
      Int d = S.rows[i][sn_class_index(S, Partition(n, 1))];
      CHECK(d == sn_dimension(S.labels[i]));
      dimsq += d * d;
    }
    CHECK(dimsq == nf);
  }
}

TEST_CASE("symmetric group rows appear in the type A reflection group tables") {
  for (int n = 2; n <= 5; n++) {
    auto& c = ctx('A', n - 1);
    SnTable S = sn_character_table(n);
    std::vector<int> type_of;
    for (int k = 0; k < c.TW.nc(); k++)
      type_of.push_back(sn_class_index(S, cycle_type_of(c.W, int(c.TW.class_rep[k]))));
    std::set<int> found;
    for (size_t i = 0; i < S.rows.size(); i++) {
      std::vector<Rat> vals;
      for (int k = 0; k < c.TW.nc(); k++) vals.push_back(Rat(S.rows[i][type_of[k]]));
      int row = row_of_values(c.TW, vals);
      CHECK(row >= 0);
      found.insert(row);
    }
    CHECK(int(found.size()) == c.TW.nc());
  }
}

TEST_CASE("column orthogonality holds exactly") {
  for (auto* T : {&ctx('B', 3).TW, &ctx('B', 2).TC}) {
    for (int a = 0; a < T->nc(); a++)
      for (int b = a; b < T->nc(); b++) {
        Cyc acc = Cyc::zero(T->exponent);
        for (const auto& r : T->irr) acc = acc.add(r.values[a].mul(r.values[b].conj()));
        Rat v;
        CHECK(T->field->rational_value(acc, v));
        CHECK(v == (a == b ? Rat(T->order) / Rat(T->class_size[a]) : Rat(0)));
      }
  }
}

TEST_CASE("table construction is deterministic") {
  auto& c = ctx('B', 2);
  CharTable again = character_table(c.VC);
  CHECK(again.prime == c.TC.prime);
  CHECK(c.TC.prime == 17);
  CHECK(c.TC.exponent == 8);
  CHECK(ctx('B', 3).TW.prime == 37);
  REQUIRE(again.irr.size() == c.TC.irr.size());
  for (size_t i = 0; i < again.irr.size(); i++) {
    CHECK(again.irr[i].dim == c.TC.irr[i].dim);
    for (int k = 0; k < again.nc(); k++)
      CHECK(c.TC.field->equal(again.irr[i].values[k], c.TC.irr[i].values[k]));
  }
}

TEST_CASE("regular representation eigenvalue oracle agrees on small groups") {
  for (auto [tp, rk] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'G', 2}}) {
    auto& c = ctx(tp, rk);
    CHECK(numeric_table_matches(c.VW, c.TW));
    CHECK(numeric_table_matches(c.VC, c.TC));
  }
  auto& a4 = ctx('A', 4);
  CHECK(numeric_table_matches(a4.VW, a4.TW));
}

TEST_CASE("dimension anchors for small groups and covers") {
  auto& a2 = ctx('A', 2);
  std::multiset<Int> dims;
  for (const auto& r : a2.TW.irr) dims.insert(r.dim);
  CHECK(dims == std::multiset<Int>{1, 1, 2});
  std::multiset<Int> gdims;
  for (int i : genuine_rows(a2.TC)) gdims.insert(a2.TC.irr[i].dim);
  CHECK(gdims == std::multiset<Int>{1, 1, 2});
  std::multiset<Int> g2dims;
  for (int i : genuine_rows(ctx('G', 2).TC)) g2dims.insert(ctx('G', 2).TC.irr[i].dim);
  CHECK(g2dims == std::multiset<Int>{2, 2, 2});

  // the rank one cover is cyclic of order four; its genuine rows take the
  // values +-i on the lifted reflection
  auto& a1 = ctx('A', 1);
  CHECK(a1.TC.exponent == 4);
  auto g = genuine_rows(a1.TC);
  REQUIRE(g.size() == 2);
  int refl = -1;
  for (int k = 0; k < a1.TC.nc(); k++)
    if (a1.TC.class_order[k] == 4) refl = k;
  REQUIRE(refl >= 0);
  const CycField& F = *a1.TC.field;
  bool plus_i = F.equal(a1.TC.irr[g[0]].values[refl], Cyc::root(4, 1)) ||
                F.equal(a1.TC.irr[g[1]].values[refl], Cyc::root(4, 1));
  bool minus_i = F.equal(a1.TC.irr[g[0]].values[refl], Cyc::root(4, 3)) ||
                 F.equal(a1.TC.irr[g[1]].values[refl], Cyc::root(4, 3));
  CHECK(plus_i);
  CHECK(minus_i);
}

TEST_CASE("genuine rows are counted by split classes and twist orbits") {
  struct Want {
    char tp;
    int rank, genuine, orbits;
  };
  for (auto w : std::vector<Want>{{'A', 2, 3, 2},
                                  {'A', 3, 3, 2},
                                  {'A', 4, 5, 3},
                                  {'B', 2, 2, 2},
                                  {'B', 3, 6, 3},
                                  {'B', 4, 5, 5},
                                  {'D', 4, 4, 4},
                                  {'G', 2, 3, 3},
                                  {'F', 4, 9, 9}}) {
    auto& c = ctx(w.tp, w.rank);
    int splits = 0;
    for (size_t k = 0; k < c.W.classes.size(); k++)
      if (c.C.wclass_split[k]) splits++;
    CHECK(int(genuine_rows(c.TC).size()) == splits);
    CHECK(int(genuine_rows(c.TC).size()) == w.genuine);
    CHECK(genuine_count_mod_assoc(c.TC) == w.orbits);
  }
}

TEST_CASE("sign twist pairs genuine rows by reflection space parity") {
  // even dimensional reflection space: every genuine row is self associate
  auto& b4 = ctx('B', 4);
  for (int i : genuine_rows(b4.TC)) {
    CHECK(b4.TC.self_associate(i));
    ClassFn xi = xi_map(b4.TC, i, 4);
    CHECK(inner_product(b4.TC, xi, char_fn(b4.TC, i)) == 2);
  }
  // odd dimensional reflection space: genuine rows come in associate pairs
  auto& b3 = ctx('B', 3);
  for (int i : genuine_rows(b3.TC)) {
    CHECK(!b3.TC.self_associate(i));
    int j = b3.TC.irr[i].associate;
    CHECK(b3.TC.irr[j].dim == b3.TC.irr[i].dim);
    ClassFn xi = xi_map(b3.TC, i, 3);
    CHECK(inner_product(b3.TC, xi, char_fn(b3.TC, j)) == 1);
    CHECK(inner_product(b3.TC, xi, char_fn(b3.TC, i)) == -1);
  }
}

TEST_CASE("induction from the trivial subgroup gives the regular character") {
  auto& c = ctx('B', 2);
  SubgroupView triv = subgroup_view(c.VW, {c.VW.id}, {});
  ClassFn reg = induce(c.VW, c.TW, triv, {Cyc::rational(c.TW.exponent, Rat(1))});
  auto mult = decompose(c.TW, reg);
  for (size_t i = 0; i < mult.size(); i++) CHECK(mult[i] == c.TW.irr[i].dim);
}

TEST_CASE("induction and restriction are adjoint") {
  auto& c = ctx('B', 3);
  SubgroupView H = dn_subgroup(c.W, c.VW);
  CharTable TH = character_table(H.view);
  for (int a = 0; a < int(TH.irr.size()); a++) {
    ClassFn ind = induce(c.VW, c.TW, H, char_fn(TH, a));
    for (int b = 0; b < int(c.TW.irr.size()); b++) {
      std::vector<Cyc> res = restrict_fn(c.VW, H, char_fn(c.TW, b));
      std::vector<Cyc> fa;
      for (const Cyc& v : char_fn(TH, a)) fa.push_back(cyc_rebase(v, c.TW.exponent));
      std::vector<Cyc> fb;
      for (const Cyc& v : res) fb.push_back(cyc_rebase(v, c.TW.exponent));
      CHECK(inner_product(c.TW, ind, char_fn(c.TW, b)) == inner_product(TH, fa, fb));
    }
  }
}

TEST_CASE("exterior powers of the reflection representation are distinct rows") {
  auto& c = ctx('B', 3);
  BnTable B = bn_table(c.W, c.VW);
  std::set<int> rows;
  for (int k = 0; k <= 3; k++) {
    int row = row_of_values(c.TW, wedge_character(c.W, k));
    CHECK(row >= 0);
    rows.insert(row);
    // the wedge degree picks out a one row plus one column bipartition
    Partition lam(1, 3 - k);
    if (lam[0] == 0) lam.clear();
    Partition mu(k, 1);
    CHECK(wedge_character(c.W, k) == bn_character(B, Bipartition{lam, mu}));
  }
  CHECK(rows.size() == 4);
}

TEST_CASE("lowest coinvariant degrees of small reflection groups") {
  auto& b2 = ctx('B', 2);
  auto bb = b_invariants(b2.W, b2.TW);
  CHECK(std::multiset<int>(bb.begin(), bb.end()) == std::multiset<int>{0, 1, 2, 2, 4});
  CHECK(bb[row_of_values(b2.TW, std::vector<Rat>(b2.TW.nc(), Rat(1)))] == 0);
  std::vector<Rat> sgn2;
  for (int k = 0; k < b2.TW.nc(); k++) sgn2.push_back(Rat(b2.TW.sgn[k]));
  CHECK(bb[row_of_values(b2.TW, sgn2)] == b2.W.m);
  CHECK(bb[row_of_values(b2.TW, wedge_character(b2.W, 1))] == 1);

  auto& g2 = ctx('G', 2);
  auto bg = b_invariants(g2.W, g2.TW);
  CHECK(std::multiset<int>(bg.begin(), bg.end()) == std::multiset<int>{0, 1, 2, 3, 3, 6});
  CHECK(bg[row_of_values(g2.TW, wedge_character(g2.W, 1))] == 1);

  auto& a3 = ctx('A', 3);
  auto ba = b_invariants(a3.W, a3.TW);
  CHECK(ba[row_of_values(a3.TW, std::vector<Rat>(a3.TW.nc(), Rat(1)))] == 0);
  std::vector<Rat> sgn3;
  for (int k = 0; k < a3.TW.nc(); k++) sgn3.push_back(Rat(a3.TW.sgn[k]));
  CHECK(ba[row_of_values(a3.TW, sgn3)] == a3.W.m);
}

TEST_CASE("elliptic class counts and split elliptic dimensions") {
  CHECK(elliptic_class_count(ctx('A', 2).W) == 1);
  CHECK(elliptic_class_count(ctx('A', 3).W) == 1);
  CHECK(elliptic_class_count(ctx('B', 3).W) == 3);
  CHECK(elliptic_class_count(ctx('B', 4).W) == 5);
  CHECK(elliptic_class_count(ctx('G', 2).W) == 3);
  CHECK(elliptic_class_count(ctx('F', 4).W) == 9);
  CHECK(elliptic_space_dims(ctx('B', 3).C) == std::pair<int, int>(3, 3));
  CHECK(elliptic_space_dims(ctx('B', 4).C) == std::pair<int, int>(5, 2));
  CHECK(elliptic_space_dims(ctx('D', 4).C) == std::pair<int, int>(3, 2));
  CHECK(elliptic_space_dims(ctx('G', 2).C) == std::pair<int, int>(3, 2));
  CHECK(elliptic_space_dims(ctx('F', 4).C) == std::pair<int, int>(9, 5));
}

TEST_CASE("split elliptic classes of the rank four classical groups") {
  auto& b4 = ctx('B', 4);
  std::set<Bipartition> got;
  for (size_t k = 0; k < b4.W.classes.size(); k++)
    if (b4.W.classes[k].elliptic && b4.C.wclass_split[k])
      got.insert(signed_cycle_type(b4.W, b4.W.classes[k].rep));
  std::set<Bipartition> want = {{{}, {2, 2}}, {{}, {4}}};
  CHECK(got == want);

  auto& d4 = ctx('D', 4);
  std::set<Bipartition> gotd;
  for (size_t k = 0; k < d4.W.classes.size(); k++)
    if (d4.W.classes[k].elliptic && d4.C.wclass_split[k])
      gotd.insert(signed_cycle_type(d4.W, d4.W.classes[k].rep));
  std::set<Bipartition> wantd = {{{}, {2, 2}}, {{}, {3, 1}}};
  CHECK(gotd == wantd);
}

TEST_CASE("split elliptic characteristic polynomials in the large exceptional group") {
  auto& f4 = ctx('F', 4);
  std::multiset<std::vector<Int>> got;
  for (size_t k = 0; k < f4.W.classes.size(); k++)
    if (f4.W.classes[k].elliptic && f4.C.wclass_split[k])
      got.insert(f4.W.classes[k].charpoly);
  std::multiset<std::vector<Int>> want = {{1, 2, 3, 2, 1},
                                          {1, 0, 2, 0, 1},
                                          {1, -2, 3, -2, 1},
                                          {1, 0, 0, 0, 1},
                                          {1, 0, -1, 0, 1}};
  CHECK(got == want);
}

TEST_CASE("spin trace squares match reflection determinants on every cover class") {
  // even dimensional reflection space
  for (auto [tp, rk] : std::vector<std::pair<char, int>>{
           {'A', 2}, {'A', 4}, {'B', 2}, {'B', 4}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    auto& c = ctx(tp, rk);
    for (const auto& cl : c.C.classes) {
      QuadC t = c.C.spin_char_value(cl.rep, 1);
      Rat d = Rat(det_one_plus(c.W.classes[cl.wclass].charpoly));
      CHECK(t * t == QuadC(Quad(d)));
    }
  }
  // odd dimensional reflection space: the virtual difference of the halves
  for (auto [tp, rk] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 3}, {'B', 3}, {'B', 5}}) {
    auto& c = ctx(tp, rk);
    Rat cst = ((rk + 1) / 2) % 2 == 1 ? Rat(-2) : Rat(2);
    for (const auto& cl : c.C.classes) {
      QuadC t = c.C.spin_char_value(cl.rep, 1) - c.C.spin_char_value(cl.rep, -1);
      Rat d = Rat(det_one_minus(c.W.classes[cl.wclass].charpoly));
      CHECK(t * t == QuadC(Quad(cst * d)));
    }
  }
}

TEST_CASE("tensoring with a spin module surjects exactly for the expected types") {
  CHECK(!iota_S_surjective(ctx('A', 2).C));
  CHECK(iota_S_surjective(ctx('A', 3).C));
  CHECK(!iota_S_surjective(ctx('A', 4).C));
  CHECK(iota_S_surjective(ctx('B', 3).C));
  CHECK(iota_S_surjective(ctx('B', 4).C));
  CHECK(!iota_S_surjective(ctx('D', 4).C));
  CHECK(iota_S_surjective(ctx('G', 2).C));
  CHECK(iota_S_surjective(ctx('F', 4).C));
  // the failures are witnessed by a split class with vanishing spin trace
  auto witness = [](Ctx& c, const Partition& pos, const Partition& neg) {
    for (const auto& cl : c.C.classes) {
      if (!c.C.wclass_split[cl.wclass]) continue;
      if (!c.C.spin_char_value(cl.rep, 1).is_zero()) continue;
      Bipartition t = signed_cycle_type(c.W, c.W.classes[cl.wclass].rep);
      if (t.first == pos && t.second == neg) return true;
    }
    return false;
  };
  CHECK(witness(ctx('D', 4), {}, {3, 1}));
}

TEST_CASE("elliptic quotient of spin tensoring has the expected rank") {
  struct Want {
    char tp;
    int rank, rk, iso;
  };
  for (auto w : std::vector<Want>{{'A', 3, 1, 1},
                                  {'B', 3, 3, 1},
                                  {'B', 4, 2, 0},
                                  {'D', 4, 1, 0},
                                  {'G', 2, 2, 0},
                                  {'F', 4, 5, 0}}) {
    auto& c = ctx(w.tp, w.rank);
    ClassFn spin = spin_char_fn(c.C, c.TC, 1);
    std::vector<int> gen = genuine_rows(c.TC);
    // multiplicity matrix of sigma (x) S over the genuine rows
    std::vector<std::vector<Rat>> M;
    for (int i = 0; i < int(c.TW.irr.size()); i++) {
      std::vector<Rat> onW = rational_values(c.TW, i);
      ClassFn f;
      for (int k = 0; k < c.TC.nc(); k++) {
        int wk = c.C.classes[c.C.class_of[size_t(c.TC.class_rep[k])]].wclass;
        f.push_back(spin[k].scale(onW[wk]));
      }
      std::vector<Rat> mult;
      for (int j : gen) mult.push_back(inner_product(c.TC, f, char_fn(c.TC, j)));
      M.push_back(mult);
    }
    // restrict the image to split elliptic classes and measure its rank there
    std::vector<int> sel;
    std::set<int> seen;
    for (int k = 0; k < c.TC.nc(); k++) {
      const auto& cl = c.C.classes[c.C.class_of[size_t(c.TC.class_rep[k])]];
      if (!c.C.wclass_split[cl.wclass] || !c.W.classes[cl.wclass].elliptic) continue;
      if (seen.insert(cl.wclass).second) sel.push_back(k);
    }
    int target = int(sel.size());
    std::vector<std::vector<Rat>> rows;
    for (const auto& mult : M) {
      std::vector<Rat> flat;
      for (int k : sel) {
        Cyc acc = Cyc::zero(c.TC.exponent);
        for (size_t j = 0; j < mult.size(); j++)
          if (mult[j] != 0) acc = acc.add(c.TC.irr[gen[j]].values[k].scale(mult[j]));
        auto co = c.TC.field->canon(acc);
        flat.insert(flat.end(), co.begin(), co.end());
      }
      rows.push_back(flat);
    }
    int rank = 0;
    std::vector<std::vector<Rat>> ech;
    std::vector<size_t> piv;
    for (auto r : rows) {
      for (size_t i = 0; i < ech.size(); i++) {
        if (r[piv[i]] == 0) continue;
        Rat f = r[piv[i]] / ech[i][piv[i]];
        for (size_t j = 0; j < r.size(); j++) r[j] -= f * ech[i][j];
      }
      size_t pv = r.size();
      for (size_t j = 0; j < r.size(); j++)
        if (r[j] != 0) {
          pv = j;
          break;
        }
      if (pv == r.size()) continue;
      ech.push_back(r);
      piv.push_back(pv);
      rank++;
    }
    CHECK(rank == w.rk);
    bool iso = rank == target && elliptic_class_count(c.W) == target;
    CHECK(int(iso) == w.iso);
    // isomorphism happens exactly for odd reflection spaces and type A
    bool expect = w.rank % 2 == 1 || w.tp == 'A';
    CHECK(iso == expect);
  }
}

TEST_CASE("spin modules appear as rows of the cover tables") {
  for (auto [tp, rk] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 2}, {'B', 2}, {'B', 3}, {'G', 2}}) {
    auto& c = ctx(tp, rk);
    for (int hs : {1, -1}) {
      ClassFn s = spin_char_fn(c.C, c.TC, hs);
      int row = c.TC.find_row(s);
      REQUIRE(row >= 0);
      CHECK(c.TC.irr[row].genuine);
      Int want = Int(1) << (rk / 2);
      CHECK(c.TC.irr[row].dim == want);
      if (rk % 2 == 0) CHECK(c.TC.find_row(spin_char_fn(c.C, c.TC, -hs)) == row);
    }
  }
}

TEST_CASE("elliptic pairing anchors") {
  for (auto [tp, rk] : std::vector<std::pair<char, int>>{{'B', 2}, {'B', 3}, {'G', 2}}) {
    auto& c = ctx(tp, rk);
    auto det1m = det_one_minus_classes(c.W);
    ClassFn one = all_ones(c.TW);
    CHECK(elliptic_pairing(c.TW, one, one, det1m) == 1);
  }
  // genuine rows pair to zero with pullbacks of reflection group rows
  auto& b2 = ctx('B', 2);
  auto cdet = cover_det_one_minus(b2.C);
  for (int i : genuine_rows(b2.TC))
    for (int j = 0; j < int(b2.TC.irr.size()); j++) {
      if (b2.TC.irr[j].genuine) continue;
      CHECK(elliptic_pairing(b2.TC, char_fn(b2.TC, i), char_fn(b2.TC, j), cdet) == 0);
    }
}

TEST_CASE("characters induced from proper parabolic type data are elliptically null") {
  // the two point stabilizer inside the rank two symmetric group view
  auto& a2 = ctx('A', 2);
  int64_t t = -1;
  for (int64_t x = 0; x < a2.VW.n; x++)
    if (x != a2.VW.id && a2.VW.mul(x, x) == a2.VW.id &&
        a2.VW.sgn[a2.VW.cls[size_t(x)]] == -1) {
      t = x;
      break;
    }
  REQUIRE(t >= 0);
  SubgroupView H = subgroup_view(a2.VW, {a2.VW.id, t}, {t});
  ClassFn perm = induce(a2.VW, a2.TW, H,
                        std::vector<Cyc>(H.view.nc(), Cyc::rational(a2.TW.exponent, Rat(1))));
  std::vector<Rat> vals;
  for (int k = 0; k < a2.TW.nc(); k++) {
    Rat v;
    CHECK(a2.TW.field->rational_value(perm[k], v));
    vals.push_back(v);
  }
  std::sort(vals.begin(), vals.end());
  CHECK(vals == std::vector<Rat>{Rat(0), Rat(1), Rat(3)});
  auto det1m = det_one_minus_classes(a2.W);
  for (int i = 0; i < int(a2.TW.irr.size()); i++)
    CHECK(elliptic_pairing(a2.TW, perm, char_fn(a2.TW, i), det1m) == 0);
}

TEST_CASE("hyperoctahedral rows are labeled by bipartitions") {
  for (int n : {2, 3}) {
    auto& c = ctx('B', n);
    BnTable B = bn_table(c.W, c.VW);
    std::set<Bipartition> labels(B.labels.begin(), B.labels.end());
    CHECK(labels.size() == B.labels.size());
    int total = 0;
    for (int a = 0; a <= n; a++)
      total += int(partitions(a).size() * partitions(n - a).size());
    CHECK(int(B.labels.size()) == total);
    // anchors: one row labels give the trivial and determinant twists
    CHECK(bn_character(B, {{n}, {}}) == std::vector<Rat>(B.table.nc(), Rat(1)));
    auto delta = bn_character(B, {{}, {n}});
    for (int k = 0; k < B.table.nc(); k++) {
      int negc = int(B.class_type[k].second.size());
      CHECK(delta[k] == Rat(negc % 2 == 0 ? 1 : -1));
    }
  }
  auto& b2 = ctx('B', 2);
  BnTable B2 = bn_table(b2.W, b2.VW);
  CHECK(B2.table.irr[B2.row_of({{1}, {1}})].dim == 2);
}

TEST_CASE("one row genuine parameterization of the classical covers") {
  for (int n : {2, 3, 4, 5}) {
    auto& c = ctx('B', n);
    BnTable B = bn_table(c.W, c.VW);
    CoverParam P = read_parameterization(c.C, c.TC, B);
    CHECK(P.labels.size() == partitions(n).size());
    std::set<int> used;
    for (size_t i = 0; i < P.labels.size(); i++) {
      CHECK(int(P.rows[i].size()) == (n % 2 == 0 ? 1 : 2));
      Int sdim = Int(1) << (n / 2);
      for (int r : P.rows[i]) {
        CHECK(used.insert(r).second);
        CHECK(c.TC.irr[r].genuine);
        CHECK(c.TC.irr[r].dim == sn_dimension(P.labels[i]) * sdim);
      }
      if (n % 2 == 1) {
        CHECK(c.TC.irr[P.rows[i][0]].associate == P.rows[i][1]);
      }
    }
  }
}

TEST_CASE("even sign change subgroups match directly built groups") {
  auto& b4 = ctx('B', 4);
  SubgroupView D = dn_subgroup(b4.W, b4.VW);
  CHECK(D.view.n == 192);
  CharTable TD = character_table(D.view);
  auto& d4 = ctx('D', 4);
  REQUIRE(TD.nc() == d4.TW.nc());
  std::multiset<Int> a, b;
  for (const auto& r : TD.irr) a.insert(r.dim);
  for (const auto& r : d4.TW.irr) b.insert(r.dim);
  CHECK(a == b);

  // restriction of one row labels stays irreducible; equal block labels split
  BnTable B = bn_table(b4.W, b4.VW);
  for (auto lam : std::vector<Partition>{{3, 1}, {2, 2}}) {
    auto f = rational_fn(B.table, bn_character(B, {lam, {}}));
    auto fr = restrict_fn(b4.VW, D, f);
    CHECK(inner_product(TD, fr, fr) == 1);
  }
  auto fsplit = rational_fn(B.table, bn_character(B, {{2}, {2}}));
  auto fs = restrict_fn(b4.VW, D, fsplit);
  CHECK(inner_product(TD, fs, fs) == 2);

  // cover subgroups agree with directly built covers
  SubgroupView DC = dn_cover_subgroup(b4.C, b4.VC);
  CHECK(DC.view.n == 384);
  CharTable TDC = character_table(DC.view);
  CHECK(genuine_rows(TDC).size() == genuine_rows(d4.TC).size());
  CHECK(genuine_count_mod_assoc(TDC) == genuine_count_mod_assoc(d4.TC));

  // rank three coincidence: even sign changes in B3 give the A3 cover counts
  auto& b3 = ctx('B', 3);
  SubgroupView D3 = dn_cover_subgroup(b3.C, b3.VC);
  CharTable TD3 = character_table(D3.view);
  auto& a3 = ctx('A', 3);
  CHECK(genuine_rows(TD3).size() == genuine_rows(a3.TC).size());
  CHECK(genuine_count_mod_assoc(TD3) == genuine_count_mod_assoc(a3.TC));
}

TEST_CASE("nongenuine cover rows are pullbacks of reflection group rows") {
  auto& c = ctx('B', 2);
  int nongen = 0;
  for (const auto& r : c.TC.irr)
    if (!r.genuine) nongen++;
  CHECK(nongen == c.TW.nc());
  for (int i = 0; i < int(c.TW.irr.size()); i++) {
    std::vector<Rat> onW = rational_values(c.TW, i);
    int row = row_of_values(c.TC, pullback_rat(c.C, onW));
    CHECK(row >= 0);
    CHECK(!c.TC.irr[row].genuine);
  }
}

TEST_CASE("signed cycle types recover the classical class data") {
  auto& b3 = ctx('B', 3);
  std::set<Bipartition> types;
  for (const auto& cl : b3.W.classes) {
    Bipartition t = signed_cycle_type(b3.W, cl.rep);
    CHECK(partition_weight(t.first) + partition_weight(t.second) == 3);
    types.insert(t);
  }
  CHECK(int(types.size()) == b3.TW.nc());

  auto& a3 = ctx('A', 3);
  std::set<Partition> atypes;
  for (const auto& cl : a3.W.classes) {
    Partition t = cycle_type_of(a3.W, cl.rep);
    CHECK(partition_weight(t) == 4);
    atypes.insert(t);
  }
  CHECK(atypes.size() == partitions(4).size());
}
