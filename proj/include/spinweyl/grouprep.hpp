#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "spinweyl/combinat.hpp"
#include "spinweyl/cyclotomic.hpp"
#include "spinweyl/rootsys.hpp"
#include "spinweyl/spincover.hpp"

namespace spinweyl {

// concrete finite group handle: multiplication plus precomputed class data.
// The callables capture the underlying group object by reference, so a view
// must not outlive the group it was built from.
struct GroupView {
  int64_t n = 0;
  int64_t id = 0;
  std::function<int64_t(int64_t, int64_t)> mul;
  std::function<int64_t(int64_t)> inv;

  std::vector<int64_t> class_rep;
  std::vector<int64_t> class_size;
  std::vector<int> class_order;
  std::vector<int32_t> cls;                   // element -> class index
  std::vector<std::vector<int64_t>> members;  // per class, sorted

  int64_t z = -1;        // central element of a double cover, -1 if none
  std::vector<int> sgn;  // determinant character per class (+1/-1)

  int nc() const { return int(class_rep.size()); }
  int identity_class() const { return cls[size_t(id)]; }
  int64_t power(int64_t x, int64_t e) const;
  int inverse_class(int k) const { return cls[size_t(inv(class_rep[k]))]; }
};

GroupView group_view(const WeylGroup& W);
GroupView group_view(const SpinCover& C);

// subgroup with elements relabeled 0..h-1; classes are conjugation orbits
// under the given generators, which must generate the subgroup
struct SubgroupView {
  GroupView view;
  std::vector<int64_t> to_parent;  // sorted parent indices
};

SubgroupView subgroup_view(const GroupView& G, std::vector<int64_t> elems,
                           const std::vector<int64_t>& gens);

struct Character {
  Int dim;
  std::vector<Cyc> values;  // per class, modulus = table exponent
  bool genuine = false;     // centrally twisted: value at z is -dim
  int associate = -1;       // row index of the sgn twist
};

struct CharTable {
  int64_t order = 0;
  int64_t exponent = 1;  // lcm of element orders; modulus of all values
  int64_t prime = 0;     // working prime of the modular stage
  int identity_class = 0;
  int z_class = -1;
  std::vector<int64_t> class_rep, class_size;
  std::vector<int> class_order;
  std::vector<int> sgn;
  std::vector<Character> irr;         // sorted by (dim, values lex)
  std::shared_ptr<CycField> field;    // canonicalizer for the value modulus

  int nc() const { return int(class_rep.size()); }
  bool self_associate(int i) const { return irr[i].associate == i; }
  // row with exactly these values, -1 if absent
  int find_row(const std::vector<Cyc>& values) const;
};

// exact irreducible character table: class-matrix eigenspace splitting over
// a prime field (smallest p = 1 mod exponent with p > 2 sqrt(|G|)), then a
// lift to exact cyclotomic values from eigenvalue multiplicities of powers;
// the result is verified by exact row orthogonality before returning.
// Refuses groups larger than the bound (default 2*10^5).
CharTable character_table(const GroupView& G, const Int& max_order = Int(0));

// class functions as value vectors in the table's class order
using ClassFn = std::vector<Cyc>;

ClassFn char_fn(const CharTable& T, int row);
ClassFn rational_fn(const CharTable& T, const std::vector<Rat>& vals);
// values of a rational-valued row (errors if any value is irrational)
std::vector<Rat> rational_values(const CharTable& T, int row);

Cyc inner_product_cyc(const CharTable& T, const ClassFn& f, const ClassFn& g);
Rat inner_product(const CharTable& T, const ClassFn& f, const ClassFn& g);
// multiplicities of each irreducible, all verified nonnegative integers
std::vector<Int> decompose(const CharTable& T, const ClassFn& f);
ClassFn tensor_fn(const CharTable& T, const ClassFn& f, const ClassFn& g);
ClassFn add_fn(const CharTable& T, const ClassFn& f, const ClassFn& g);
ClassFn sub_fn(const CharTable& T, const ClassFn& f, const ClassFn& g);

// induction from a subgroup view of the table's group, and restriction to it;
// subgroup values may live in a submodulus (element orders divide upward)
ClassFn induce(const GroupView& G, const CharTable& TG, const SubgroupView& H,
               const std::vector<Cyc>& fH);
std::vector<Cyc> restrict_fn(const GroupView& G, const SubgroupView& H,
                             const ClassFn& fG);

// trace on the k-th exterior power of the reflection representation
std::vector<Rat> wedge_character(const WeylGroup& W, int k);

// det(1 - w) resp. det(1 + w) on the span of the roots, one value per class
std::vector<Rat> det_one_minus_classes(const WeylGroup& W);
std::vector<Rat> det_one_plus_classes(const WeylGroup& W);

// alternating-wedge pairing Sum_i (-1)^i dim Hom(wedge^i V (x) f, g); the
// det1m vector is det(1 - w) per class of the table's group
Int elliptic_pairing(const CharTable& T, const ClassFn& f, const ClassFn& g,
                     const std::vector<Rat>& det1m);

// pull a reflection-group class function back through the cover projection
std::vector<Rat> pullback_rat(const SpinCover& C, const std::vector<Rat>& onW);
std::vector<Rat> cover_det_one_minus(const SpinCover& C);
std::vector<Rat> cover_det_one_plus(const SpinCover& C);

int elliptic_class_count(const WeylGroup& W);
// {elliptic class count of W, split elliptic class count}
std::pair<int, int> elliptic_space_dims(const SpinCover& C);

// exact spin character of the cover as a table-ready value vector
ClassFn spin_char_fn(const SpinCover& C, const CharTable& T, int half_sign);

// scalar by which a central group-algebra element acts on row `row`: the
// weight vector holds one total coefficient per class, in table class order
QuadC casimir_scalar(const CharTable& T, const CasimirElement& om, int row);

// true iff the spin trace is nonzero on every cover class over a split class
bool iota_S_surjective(const SpinCover& C);

// sgn twist plus (-1)^(dim V) times the identity, applied to a genuine row
ClassFn xi_map(const CharTable& T, int row, int dimV);

// genuine irreducibles counted modulo the sgn-twist equivalence
int genuine_count_mod_assoc(const CharTable& T);
std::vector<int> genuine_rows(const CharTable& T);

// smallest symmetric-algebra degree of V containing each irreducible
std::vector<int> b_invariants(const WeylGroup& W, const CharTable& T);

// symmetric group character table over cycle-type classes, integer values,
// built from Young-subgroup permutation characters by dominance peeling
struct SnTable {
  int n = 0;
  std::vector<Partition> classes;  // cycle types
  std::vector<Int> class_size;
  std::vector<Partition> labels;   // row labels
  std::vector<std::vector<Int>> rows;
};

SnTable sn_character_table(int n);
Int sn_class_size(int n, const Partition& mu);
int sn_class_index(const SnTable& S, const Partition& mu);
Int sn_dimension(const Partition& lam);

// cycle type of a type-A Weyl element acting on the ambient coordinates
Partition cycle_type_of(const WeylGroup& W, int w);
// positive and negative cycle partitions of a signed permutation (B, C or D)
Bipartition signed_cycle_type(const WeylGroup& W, int w);

// hyperoctahedral table with every row located by its bipartition label via
// induction from block subgroups (first block plain, second sign-twisted)
struct BnTable {
  int n = 0;
  CharTable table;
  std::vector<Bipartition> class_type;  // per class
  std::vector<Bipartition> labels;      // per irreducible row
  int row_of(const Bipartition& lm) const;
};

BnTable bn_table(const WeylGroup& W, const GroupView& view);
std::vector<Rat> bn_character(const BnTable& B, const Bipartition& lm);

// genuine rows of a type-B/C cover attached to partitions of n: the product
// of the one-block row with a spin character; even n gives one row per
// partition, odd n an associate pair
struct CoverParam {
  std::vector<Partition> labels;
  std::vector<std::vector<int>> rows;  // 1 or 2 table rows per label
};

CoverParam read_parameterization(const SpinCover& C, const CharTable& Tcov,
                                 const BnTable& B);

// index-two subgroup of even sign changes inside a type-B group or cover
SubgroupView dn_subgroup(const WeylGroup& W, const GroupView& view);
SubgroupView dn_cover_subgroup(const SpinCover& C, const GroupView& view);

// regular-representation oracle: numerically decompose the class algebra in
// the left regular representation, snap eigenvalue data to exact cyclotomic
// values, and compare with the symbolic table; |G| <= 200
bool numeric_table_matches(const GroupView& G, const CharTable& T);

}  // namespace spinweyl
