#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinweyl/linalg.hpp"
#include "spinweyl/numeric.hpp"

namespace spinweyl {

// thrown when a construction would exceed the enumeration bound
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootSystem {
  char type = 0;  // 'A','B','C','D','E','F','G'
  int rank = 0;
  int ambient = 0;
  Rat t = Rat(1);  // scale of the bilinear form relative to the standard dot

  std::vector<RatVec> simple;                // ambient coordinates
  std::vector<RatVec> pos;                   // positive roots, ambient
  std::vector<std::vector<int>> pos_coords;  // positive roots, simple-root coordinates
  std::vector<int> simple_index;             // index of each simple root inside pos

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
  int num_pos() const { return (int)pos.size(); }

  Rat form(const RatVec& u, const RatVec& v) const { return t * dot_std(u, v); }
  Rat root_norm(int i) const { return form(pos[i], pos[i]); }
  RatVec coroot(int i) const;
  Rat coroot_pairing(int i, int j) const;  // <coroot_i, coroot_j>

  // 2<a, simple_j>/<simple_j, simple_j>, always an integer
  int cartan_pairing(const std::vector<int>& coords, int j) const;

  RatVec two_rho_check() const;      // sum of positive coroots
  Rat two_rho_check_norm() const;    // <2 rho_check, 2 rho_check>

  Int weyl_order() const;
};

// validates the (type, rank) combination; t scales the form
RootSystem build_root_system(char type, int rank, const Rat& t = Rat(1));

struct ConjClass {
  int rep = 0;  // smallest element index in the class
  int64_t size = 0;
  int order = 0;
  std::vector<Int> charpoly;  // of the rep in the reflection representation
  bool elliptic = false;      // det(1 - w) != 0
};

// enumerated Weyl group; elements are indexed in lexicographic order of their
// action on the positive roots (values in [0, 2m): r < m is the r-th positive
// root, r >= m its negative)
struct WeylGroup {
  RootSystem rs;
  int m = 0;       // number of positive roots
  int rank = 0;
  int64_t n = 0;   // group order
  int identity = 0;

  std::vector<uint16_t> perms;    // n * m
  std::vector<int32_t> rcay;      // n * rank, w -> w s_i
  std::vector<int32_t> invidx;    // n
  std::vector<int32_t> length;    // n
  std::vector<uint8_t> words;     // canonical reduced words, concatenated
  std::vector<int64_t> word_off;  // n + 1
  std::vector<int32_t> refl;      // per positive root: element index of its reflection
  std::vector<ConjClass> classes;
  std::vector<int32_t> class_of;  // n

  const uint16_t* perm(int w) const { return &perms[(size_t)w * m]; }
  uint16_t root_image(int w, int r) const {
    return r < m ? perm(w)[r] : neg(perm(w)[r - m]);
  }
  uint16_t neg(uint16_t r) const { return r < m ? r + m : r - m; }

  int gen_right(int w, int i) const { return rcay[(size_t)w * rank + i]; }
  int gen_left(int w, int i) const { return invidx[gen_right(invidx[w], i)]; }
  int mult(int u, int w) const;  // u * w
  int inverse(int w) const { return invidx[w]; }
  int conj_by_gen(int w, int i) const { return gen_right(gen_left(w, i), i); }
  int element_order(int w) const;
  std::vector<int> word_of(int w) const;
  IntMat matrix_of(int w) const;  // simple-root basis, rank x rank
  int element_from_word(const std::vector<int>& word) const;
};

// enumerates the group; refuses when the order exceeds the bound
// (default 10^6, overridden by max_order > 0 or SPINWEYL_MAX_GROUP_ORDER)
WeylGroup build_weyl_group(const RootSystem& rs, const Int& max_order = Int(0));

Int default_group_bound();

}  // namespace spinweyl
